#!/usr/bin/env python3
"""Regenerates eval_golden.tsv: expression<TAB>soft<TAB>real.

Expected values come from high-precision dual-number arithmetic in mpmath,
independent of the C++ evaluator.
"""
import random

import mpmath as mp

mp.mp.dps = 50


class Dual:
    def __init__(self, soft, real):
        self.soft = mp.mpf(soft)
        self.real = mp.mpf(real)

    def __add__(self, o):
        return Dual(self.soft + o.soft, self.real + o.real)

    def __sub__(self, o):
        return Dual(self.soft - o.soft, self.real - o.real)

    def __mul__(self, o):
        return Dual(self.soft * o.real + self.real * o.soft, self.real * o.real)

    def __truediv__(self, o):
        return Dual((self.soft * o.real - self.real * o.soft) / o.real**2, self.real / o.real)

    def pow(self, n):
        out = Dual(0, 1)
        for _ in range(n):
            out = out * self
        return out


FUNCS = {
    "exp": (mp.exp, mp.exp),
    "ln": (mp.log, lambda x: 1 / x),
    "sin": (mp.sin, mp.cos),
    "cos": (mp.cos, lambda x: -mp.sin(x)),
    "tan": (mp.tan, lambda x: 1 / mp.cos(x) ** 2),
    "sqrt": (mp.sqrt, lambda x: 1 / (2 * mp.sqrt(x))),
}


def lift(name, d):
    f, df = FUNCS[name]
    return Dual(d.soft * df(d.real), f(d.real))


def literal(rng, positive=False):
    a = round(rng.uniform(-5, 5), 2)
    b = round(rng.uniform(0.2, 3) if positive else rng.uniform(-4, 4), 2)
    if not positive and abs(b) < 0.2:
        b = 0.75
    text = f"({a}z0 + {b})" if b >= 0 else f"({a}z0 - {-b})"
    return text, Dual(mp.mpf(str(a)), mp.mpf(str(b)))


def case(rng, kind):
    if kind == "binary":
        (t1, d1), (t2, d2) = literal(rng), literal(rng)
        op = rng.choice("+-*/")
        res = {"+": d1 + d2, "-": d1 - d2, "*": d1 * d2, "/": d1 / d2}[op]
        return f"{t1} {op} {t2}", res
    if kind == "power":
        t, d = literal(rng)
        n = rng.randint(0, 6)
        return f"{t}^{n}", d.pow(n)
    if kind == "func":
        name = rng.choice(sorted(FUNCS))
        t, d = literal(rng, positive=name in ("ln", "sqrt"))
        if name == "tan":
            d.real = mp.mpf(str(round(rng.uniform(-1.2, 1.2), 2)))
            t = f"({mp.nstr(d.soft, 15)}z0 + {mp.nstr(d.real, 15)})"
        return f"{name}{t}", lift(name, d)
    # nested: f(p) * q + r
    name = rng.choice(["exp", "sin", "cos"])
    (tp, dp), (tq, dq), (tr, dr) = literal(rng), literal(rng), literal(rng)
    return f"{name}{tp} * {tq} + {tr}", lift(name, dp) * dq + dr


def main():
    rng = random.Random(20240601)
    kinds = ["binary"] * 70 + ["power"] * 40 + ["func"] * 60 + ["nested"] * 30
    with open("eval_golden.tsv", "w") as fh:
        for kind in kinds:
            expr, res = case(rng, kind)
            fh.write(f"{expr}\t{mp.nstr(res.soft, 17)}\t{mp.nstr(res.real, 17)}\n")


if __name__ == "__main__":
    main()
