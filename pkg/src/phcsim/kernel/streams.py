"""Named random streams with buffered draws.

One stream per stochastic process keeps scenario sweeps common-random-number
comparable: a parameter change that affects one process leaves every other
process's draw sequence untouched. Stream identity is (base_seed,
replication_index, stream name), so replications are independent and a
(seed, name) pair reproduces bit-identically on any platform numpy supports.
"""

import zlib

import numpy as np

_CHUNK = 2048


class RandomStream:
    """Buffered wrapper over one numpy PCG64 generator.

    Draws are consumed from pre-generated chunks per primitive kind; the
    visible sequence for each primitive is the generator's own sequence, so
    chunking does not change reproducibility.
    """

    __slots__ = ("name", "_gen", "_u", "_iu", "_n", "_in", "_e", "_ie")

    def __init__(self, name, seed_seq):
        self.name = name
        self._gen = np.random.Generator(np.random.PCG64(seed_seq))
        self._u = self._gen.random(_CHUNK)
        self._iu = 0
        self._n = self._gen.standard_normal(_CHUNK)
        self._in = 0
        self._e = self._gen.standard_exponential(_CHUNK)
        self._ie = 0

    def uniform01(self):
        i = self._iu
        if i == _CHUNK:
            self._u = self._gen.random(_CHUNK)
            i = 0
        self._iu = i + 1
        return self._u[i]

    def standard_normal(self):
        i = self._in
        if i == _CHUNK:
            self._n = self._gen.standard_normal(_CHUNK)
            i = 0
        self._in = i + 1
        return self._n[i]

    def standard_exponential(self):
        i = self._ie
        if i == _CHUNK:
            self._e = self._gen.standard_exponential(_CHUNK)
            i = 0
        self._ie = i + 1
        return self._e[i]

    def integers(self, low, high):
        """Uniform integer in [low, high] inclusive."""
        return low + int(self.uniform01() * (high - low + 1))


class StreamSet:
    """Factory and cache for named streams of one replication."""

    def __init__(self, base_seed, replication=0):
        self.base_seed = int(base_seed)
        self.replication = int(replication)
        self._streams = {}

    def stream(self, name):
        s = self._streams.get(name)
        if s is None:
            # crc32 maps the name into the seed-sequence key space; distinct
            # names yield distinct, uncorrelated child sequences.
            key = zlib.crc32(name.encode("utf-8"))
            seq = np.random.SeedSequence((self.base_seed, self.replication, key))
            s = RandomStream(name, seq)
            self._streams[name] = s
        return s
