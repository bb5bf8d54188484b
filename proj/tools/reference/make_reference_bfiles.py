#!/usr/bin/env python3
# Copyright 2026 The Arndt Compositions Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the reference b-files under data/oeis/.

Deliberately shares no code with the C++ library: Fibonacci by iteration,
floor(phi^n) by 200-digit arithmetic, and the Arndt triangle by filtering
itertools-generated cut sets.
"""

import argparse
import itertools
import pathlib

from mpmath import mp, floor, sqrt


def fibonacci(count):
    a, b = 0, 1
    for n in range(count):
        yield n, a
        a, b = b, a + b


def floor_phi_powers(count):
    mp.dps = 200
    phi = (1 + sqrt(5)) / 2
    for n in range(count):
        yield n, int(floor(phi ** n))


def compositions(n):
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def is_arndt(parts):
    return all(parts[i] > parts[i + 1] for i in range(0, len(parts) - 1, 2))


def arndt_triangle_flat(max_n):
    index = 1
    for n in range(1, max_n + 1):
        row = [0] * (n + 1)
        for c in compositions(n):
            if is_arndt(c):
                row[len(c)] += 1
        last = max(m for m in range(n + 1) if row[m])
        for m in range(1, last + 1):
            yield index, row[m]
            index += 1


def write(path, header, pairs):
    with open(path, "w") as out:
        for line in header:
            out.write("# " + line + "\n")
        for index, value in pairs:
            out.write(f"{index} {value}\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parents[2] / "data" / "oeis"))
    parser.add_argument("--terms", type=int, default=101)
    parser.add_argument("--triangle-rows", type=int, default=20)
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    write(out / "A000045.b",
          ["A000045 Fibonacci numbers F(n), offset 0."],
          fibonacci(args.terms))
    write(out / "A014217.b",
          ["A014217 a(n) = floor(phi^n), offset 0.",
           "Computed with 200-digit arithmetic."],
          floor_phi_powers(args.terms))
    write(out / "A354787.b",
          ["A354787 Arndt compositions of n with k parts, read by rows.",
           f"Rows n = 1..{args.triangle_rows}, k = 1..(last nonzero); running index from 1.",
           "Computed by filtering all compositions (independent of the C++ code)."],
          arndt_triangle_flat(args.triangle_rows))


if __name__ == "__main__":
    main()
