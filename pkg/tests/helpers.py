import random

from wsync.matrix import Matrix


def random_matrix(s, n, rng: random.Random, zero_bias=0.5):
    return Matrix(s, [[s.zero if rng.random() < zero_bias else s.sample(rng)
                       for _ in range(n)] for _ in range(n)])


def random_partial01(s, n, rng: random.Random, empty_row=0.2):
    rows = []
    for _ in range(n):
        row = [s.zero] * n
        if rng.random() >= empty_row:
            row[rng.randrange(n)] = s.one
        rows.append(row)
    return Matrix(s, rows)


def random_set(make, rng, max_n, max_k):
    n = rng.randint(1, max_n)
    return [make(n) for _ in range(rng.randint(1, max_k))]


def random_word(rng, max_len, min_len=1):
    return ''.join(rng.choice('01') for _ in range(rng.randint(min_len, max_len)))
