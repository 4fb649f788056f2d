"""Counter-based deterministic randomness.

Every party keys its own stream from (seed, role labels), so transcripts
are reproducible bit-for-bit and independent of execution order.  Field
elements are sampled by exact rejection from 64-bit blocks, which keeps
draws portable across platforms and free of modulo bias.
"""

from hashlib import blake2b

import numpy as np

_U64 = 1 << 64


class DeterministicStream:
    """Keyed counter-mode generator yielding uniform field elements."""

    def __init__(self, seed: int, *labels):
        tag = f"{seed}|" + "|".join(str(part) for part in labels)
        self._key = blake2b(tag.encode(), digest_size=16).digest()
        self._counter = 0
        self._buffer: list[int] = []

    def _next_u64(self) -> int:
        if not self._buffer:
            block = blake2b(self._counter.to_bytes(8, "little"),
                            key=self._key, digest_size=64).digest()
            self._counter += 1
            self._buffer = [int.from_bytes(block[i:i + 8], "little")
                            for i in range(56, -8, -8)]
        return self._buffer.pop()

    def _u64_array(self, count: int) -> np.ndarray:
        """The next `count` words of the stream as a uint64 array."""
        head = []
        while self._buffer and len(head) < count:
            head.append(self._buffer.pop())
        need = count - len(head)
        blocks = (need + 7) // 8
        chunks = []
        for _ in range(blocks):
            chunks.append(blake2b(self._counter.to_bytes(8, "little"),
                                  key=self._key, digest_size=64).digest())
            self._counter += 1
        fresh = np.frombuffer(b"".join(chunks), dtype="<u8") if chunks else \
            np.empty(0, dtype=np.uint64)
        if need < fresh.shape[0]:
            # leftover words stay pop-ordered for later scalar draws
            self._buffer = [int(v) for v in fresh[need:][::-1]]
        out = np.empty(count, dtype=np.uint64)
        out[:len(head)] = head
        out[len(head):] = fresh[:need]
        return out

    def randint_below(self, upper: int) -> int:
        """Uniform integer in [0, upper) by rejection."""
        if upper <= 0:
            raise ValueError("upper bound must be positive")
        limit = (_U64 // upper) * upper
        while True:
            x = self._next_u64()
            if x < limit:
                return x % upper

    def field_element(self, q: int) -> int:
        return self.randint_below(q)

    def nonzero_field_element(self, q: int) -> int:
        while True:
            x = self.randint_below(q)
            if x != 0:
                return x

    def field_matrix(self, rows: int, cols: int, q: int) -> np.ndarray:
        """Uniform matrix over GF(q), dtype int64.

        Entries are drawn as one batch; slots rejected by the bias filter
        (astronomically rare for the default modulus) refill in index
        order from subsequent words.
        """
        limit = np.uint64((_U64 // q) * q)
        vals = self._u64_array(rows * cols)
        bad = vals >= limit
        while bad.any():
            vals[bad] = self._u64_array(int(bad.sum()))
            bad = vals >= limit
        out = (vals % np.uint64(q)).astype(np.int64)
        return out.reshape(rows, cols)

    def distinct_nonzero(self, count: int, q: int) -> list[int]:
        """`count` pairwise-distinct nonzero field elements."""
        if count > q - 1:
            raise ValueError(f"cannot draw {count} distinct nonzero values mod {q}")
        seen: set[int] = set()
        out: list[int] = []
        while len(out) < count:
            x = self.nonzero_field_element(q)
            if x not in seen:
                seen.add(x)
                out.append(x)
        return out

    def sample_indices(self, population: int, count: int) -> list[int]:
        """Sorted sample of `count` distinct indices from range(population)."""
        if count > population:
            raise ValueError("sample larger than population")
        seen: set[int] = set()
        while len(seen) < count:
            seen.add(self.randint_below(population))
        return sorted(seen)
