import numpy as np


class RngStream:
    """Seeded stream carrying every random decision of a run.

    Child streams are derived from the seed and a key path, never from the
    parent's position, so ``child(i)`` is reproducible no matter how much
    of the parent has been consumed.
    """

    def __init__(self, seed=0, key=()):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.key = tuple(int(part) for part in key)
        self._seq = np.random.SeedSequence(self.seed, spawn_key=self.key)
        self.generator = np.random.Generator(np.random.PCG64(self._seq))

    def __repr__(self):
        return f'RngStream(seed={self.seed}, key={self.key})'

    def child(self, *key):
        return RngStream(self.seed, self.key + key)

    def integer(self, high):
        """Uniform integer in ``[0, high)``."""
        return int(self.generator.integers(high))

    def sample(self, pool, size):
        """``size`` distinct items of ``pool`` drawn uniformly without replacement."""
        pool = np.asarray(pool)
        if size >= len(pool):
            return self.generator.permutation(pool)
        return self.generator.choice(pool, size=size, replace=False)

    def uniform_left_open(self, high):
        """Uniform real in ``(0, high]``."""
        return float(high * (1.0 - self.generator.random()))


def derive_seed(master_seed, *key):
    """64-bit seed that is a pure function of ``master_seed`` and ``key``."""
    seq = np.random.SeedSequence(int(master_seed), spawn_key=tuple(int(part) for part in key))
    return int(seq.generate_state(1, dtype=np.uint64)[0])
