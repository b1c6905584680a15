"""Reference implementations used only by the tests.

None of these share code with the package: additions go through
schoolbook carry propagation, counts through brute force.
"""

import math


def carry_add(xs, ys, b):
    """Digit-by-digit addition with carry, least significant first, overflow dropped."""
    out = []
    carry = 0
    for x, y in zip(xs, ys):
        s = x + y + carry
        out.append(s % b)
        carry = s // b
    return out


def twisted_add(xs, ys, b, u):
    """u * (x + y) mod b**t as repeated carry addition."""
    s = carry_add(xs, ys, b)
    acc = [0] * len(xs)
    for _ in range(u):
        acc = carry_add(acc, s, b)
    return acc


def scheme_add_oracle(b, parts, units, x, y):
    out = []
    pos = 0
    for t, u in zip(parts, units):
        out.extend(twisted_add(x[pos:pos + t], y[pos:pos + t], b, u))
        pos += t
    return out


def byte_recipe(x, y):
    """Prose recipe for (Z/8) x (Z/4) x (Z/2)^3 on 8 bits."""
    def to_int(bits):
        return sum(bit * 2**i for i, bit in enumerate(bits))

    def to_bits(k, n):
        return [(k >> i) & 1 for i in range(n)]

    first = to_bits((to_int(x[0:3]) + to_int(y[0:3])) % 8, 3)
    second = to_bits((to_int(x[3:5]) + to_int(y[3:5])) % 4, 2)
    rest = [a ^ c for a, c in zip(x[5:8], y[5:8])]
    return first + second + rest


def brute_compositions(m):
    if m == 0:
        return [()]
    return [(first,) + rest for first in range(1, m + 1) for rest in brute_compositions(m - first)]


def brute_partitions(m):
    return {tuple(sorted(c, reverse=True)) for c in brute_compositions(m)}


def phi_scan(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def assoc_counterexample_loops(table):
    n = len(table)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    return (x, y, z)
    return None


def identity_loops(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def element_orders(table, e):
    orders = {}
    for x in range(len(table)):
        k, p = 1, x
        while p != e:
            p = table[p][x]
            k += 1
        orders[k] = orders.get(k, 0) + 1
    return orders
