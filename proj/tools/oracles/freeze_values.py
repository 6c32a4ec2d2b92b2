#!/usr/bin/env python3
#
# Copyright 2026 The Symmetria Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Reference values for the unit tests, computed independently of the C++ code.

Uses mpmath at 40 digits (elliptic functions through theta quotients, Legendre
functions, adaptive quadrature) and networkx for the graph automorphism count.
Prints a C++ header; regenerate with

    python3 tools/oracles/freeze_values.py > tests/frozen_values.hpp
"""

import itertools

import mpmath as mp
import networkx as nx
from networkx.algorithms import isomorphism

mp.mp.dps = 40

out = []


def emit(line=""):
    out.append(line)


def real(name, x):
    emit(f"inline constexpr double {name} = {mp.nstr(x, 20, strip_zeros=False)};")


def cplx(name, z):
    z = mp.mpc(z)
    emit(f"inline const std::complex<double> {name}{{{mp.nstr(z.real, 20)}, {mp.nstr(z.imag, 20)}}};")


def jacobi(u, k):
    # Theta-quotient form; independent of the Landen/AGM route used in the library.
    m = mp.mpf(k) ** 2
    return (mp.ellipfun("sn", u, m=m), mp.ellipfun("cn", u, m=m), mp.ellipfun("dn", u, m=m))


def tag(x):
    return str(x).replace("-", "m").replace(".", "p")


emit("// Generated by tools/oracles/freeze_values.py. Do not edit by hand.")
emit("#pragma once")
emit()
emit("#include <complex>")
emit()
emit("namespace frozen {")
emit()

emit("// Complete elliptic integral K(k).")
for k in ("0.3", "0.5", "0.9"):
    real(f"K_{tag(k)}", mp.ellipk(mp.mpf(k) ** 2))
emit()

emit("// sn, cn, dn at real arguments.")
for u, k in (("0.7", "0.6"), ("2.3", "0.9"), ("-1.1", "0.3")):
    s, c, d = jacobi(mp.mpf(u), k)
    base = f"{tag(u)}_{tag(k)}"
    real(f"sn_{base}", s)
    real(f"cn_{base}", c)
    real(f"dn_{base}", d)
emit()

emit("// sn, cn, dn at complex arguments.")
for (x, y), k in ((("0.3", "0.2"), "0.6"), (("0.7", "0.3"), "0.5"), (("1.9", "-0.8"), "0.8"), (("0.2", "1.1"), "0.3")):
    z = mp.mpc(mp.mpf(x), mp.mpf(y))
    s, c, d = jacobi(z, k)
    base = f"{tag(x)}_{tag(y)}_{tag(k)}"
    cplx(f"csn_{base}", s)
    cplx(f"ccn_{base}", c)
    cplx(f"cdn_{base}", d)
emit()

emit("// Quantum R-matrix weights at eta = 0.3, k = 0.5, u = 0.7.")
eta, k, u = mp.mpf("0.3"), "0.5", mp.mpf("0.7")
sa, ca, da = jacobi(mp.mpc(u, eta), k)
sb, cb, db = jacobi(mp.mpc(0, eta), k)
W = (sb / sa, (da / sa) * (sb / db), (ca / sa) * (sb / cb))
for i, w in enumerate(W, 1):
    cplx(f"W{i}_eta0p3_k0p5_u0p7", w)
emit()

emit("// Classical weights at rho = 1, k = 0.5, u = 0.4.")
s, c, d = jacobi(mp.mpf("0.4"), "0.5")
real("w1_k0p5_u0p4", 1 / s)
real("w2_k0p5_u0p4", d / s)
real("w3_k0p5_u0p4", c / s)
emit()

emit("// Rep3 couplings read off the quantum curve at eta = 0.3, k = 0.5, u = 0.37, J1 = 1.")
sa, ca, da = jacobi(mp.mpc(mp.mpf("0.37"), eta), k)
W = (sb / sa, (da / sa) * (sb / db), (ca / sa) * (sb / cb))
C = [(W[a] ** 2 - W[(a + 1) % 3] ** 2) / (W[(a + 2) % 3] ** 2 - 1) for a in range(3)]
# C_a J_g + J_a - J_b = 0 on cyclic triples; solve the last two with J1 = 1.
A = mp.matrix([[1, -1], [C[2], 1]])
rhs = mp.matrix([-C[1], 1])
J2, J3 = mp.lu_solve(A, rhs)
assert abs(C[0] * J3 + 1 - J2) < mp.mpf(10) ** -30
real("J2_curve", mp.re(J2))
real("J3_curve", mp.re(J3))
emit()

emit("// Associated Legendre functions with the Condon-Shortley phase.")
for n, h, x in ((2, 1, "0.3"), (3, 2, "-0.4"), (4, -2, "0.6"), (5, 3, "0.1"), (6, 0, "0.75")):
    x = mp.mpf(x)
    value = mp.legenp(n, h, x)
    if h < 0:
        m = -h
        mirror = (-1) ** m * mp.factorial(n - m) / mp.factorial(n + m) * mp.legenp(n, m, x)
        assert abs(mirror - value) < mp.mpf(10) ** -30
    real(f"P_{n}_{tag(h)}_{tag(mp.nstr(x, 3))}", value)
emit()

emit("// Constants c(n,h) with  integral = c * r^n e^{ih phi} P_n^h(cos theta).")
px, py, pz = mp.mpf("0.4"), mp.mpf("0.3"), mp.mpf("0.5")
r = mp.sqrt(px**2 + py**2 + pz**2)
theta, phi = mp.acos(pz / r), mp.atan2(py, px)
for n, h in ((1, 0), (2, 0), (2, 1), (3, 2), (3, -1)):
    integral = mp.quad(lambda t: (pz + 1j * px * mp.cos(t) + 1j * py * mp.sin(t)) ** n * mp.exp(1j * h * t), [-mp.pi, mp.pi])
    basis = r**n * mp.exp(1j * h * phi) * mp.legenp(n, h, mp.cos(theta))
    cplx(f"c_{n}_{tag(h)}", integral / basis)
emit()


def truncated_icosahedron():
    phi = (1 + 5**0.5) / 2
    ico = []
    for a, b in itertools.product((-1, 1), repeat=2):
        for p in ((0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)):
            ico.append(p)
    d2 = lambda p, q: sum((x - y) ** 2 for x, y in zip(p, q))
    edges = [(i, j) for i in range(12) for j in range(i + 1, 12) if abs(d2(ico[i], ico[j]) - 4) < 1e-9]
    g = nx.Graph()
    # Vertex (i, j) sits on edge i-j next to corner i.
    for i, j in edges:
        g.add_edge((i, j), (j, i))
    for c in range(12):
        ring = [(c, j) for i, j in edges if i == c] + [(c, i) for i, j in edges if j == c]
        for a, b in itertools.combinations(ring, 2):
            if abs(d2(ico[a[1]], ico[b[1]]) - 4) < 1e-9:
                g.add_edge(a, b)
    return g


g = truncated_icosahedron()
assert g.number_of_nodes() == 60 and g.number_of_edges() == 90
order = sum(1 for _ in isomorphism.GraphMatcher(g, g).isomorphisms_iter())
emit("// Automorphism count of the truncated icosahedron graph (networkx VF2).")
emit(f"inline constexpr unsigned long long c60_automorphisms = {order};")
emit()
emit("}  // namespace frozen")

print("/*")
print(" * Copyright 2026 The Symmetria Authors")
print(" *")
print(' * Licensed under the Apache License, Version 2.0 (the "License");')
print(" * you may not use this file except in compliance with the License.")
print(" * You may obtain a copy of the License at")
print(" *")
print(" * http://www.apache.org/licenses/LICENSE-2.0")
print(" *")
print(" * Unless required by applicable law or agreed to in writing, software")
print(' * distributed under the License is distributed on an "AS IS" BASIS,')
print(" * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.")
print(" * See the License for the specific language governing permissions and")
print(" * limitations under the License.")
print(" */")
print()
print("\n".join(out))
