from fractions import Fraction

from lgmirror.jacobi import splitmix64


def rational_points(m: int, count: int, seed: int) -> list[list[Fraction]]:
    """Seeded nonzero small-rational b-vectors, numerators in [-9,9], denominators in [1,9]."""
    gen = splitmix64(seed)
    n = m * (m + 1) // 2
    points = []
    while len(points) < count:
        b = []
        for _ in range(n):
            num = next(gen) % 18 - 9
            if num >= 0:
                num += 1
            den = next(gen) % 9 + 1
            b.append(Fraction(num, den))
        points.append(b)
    return points
