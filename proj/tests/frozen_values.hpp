/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Generated by tools/oracles/freeze_values.py. Do not edit by hand.
#pragma once

#include <complex>

namespace frozen {

// Complete elliptic integral K(k).
inline constexpr double K_0p3 = 1.6080486199305128013;
inline constexpr double K_0p5 = 1.6857503548125960429;
inline constexpr double K_0p9 = 2.2805491384227702046;

// sn, cn, dn at real arguments.
inline constexpr double sn_0p7_0p6 = 0.62991711532348681044;
inline constexpr double cn_0p7_0p6 = 0.77666236410845673098;
inline constexpr double dn_0p7_0p6 = 0.92582589832868324581;
inline constexpr double sn_2p3_0p9 = 0.99996405462222737269;
inline constexpr double cn_2p3_0p9 = -0.0084787654452208663947;
inline constexpr double dn_2p3_0p9 = 0.43595668416187267793;
inline constexpr double sn_m1p1_0p3 = -0.88400298105947611452;
inline constexpr double cn_m1p1_0p3 = 0.46748126109819580012;
inline constexpr double dn_m1p1_0p3 = 0.96419317859701556605;

// sn, cn, dn at complex arguments.
inline const std::complex<double> csn_0p3_0p2_0p6{0.30173916653805722466, 0.18964449973301390658};
inline const std::complex<double> ccn_0p3_0p2_0p6{0.97384355236320691838, -0.058760129539394790245};
inline const std::complex<double> cdn_0p3_0p2_0p6{0.99025422620784315967, -0.020803084539771645177};
inline const std::complex<double> csn_0p7_0p3_0p5{0.66472844397710943233, 0.22206057706983783231};
inline const std::complex<double> ccn_0p7_0p3_0p5{0.80088492131442097638, -0.18430860406515482103};
inline const std::complex<double> cdn_0p7_0p3_0p5{0.9504573689896405118, -0.038826039620589537597};
inline const std::complex<double> csn_1p9_m0p8_0p8{1.1009164514009056875, -0.020897013957906937274};
inline const std::complex<double> ccn_1p9_m0p8_0p8{0.049725364562707620334, 0.46265857784515349458};
inline const std::complex<double> cdn_1p9_m0p8_0p8{0.47492076759271713071, 0.031002549337938895067};
inline const std::complex<double> csn_0p2_1p1_0p3{0.36356116535388198067, 1.3400813643918645646};
inline const std::complex<double> ccn_0p2_1p1_0p3{1.6582995359933014959, -0.29379586252823653803};
inline const std::complex<double> cdn_0p2_1p1_0p3{1.0730319515772729768, -0.040863777412411669772};

// Quantum R-matrix weights at eta = 0.3, k = 0.5, u = 0.7.
inline const std::complex<double> W1_eta0p3_k0p5_u0p7{0.13821597552373968145, 0.41374336478364992108};
inline const std::complex<double> W2_eta0p3_k0p5_u0p7{0.14573955983556157545, 0.38342534487607104777};
inline const std::complex<double> W3_eta0p3_k0p5_u0p7{0.17878322776742961313, 0.29252157715131072561};

// Classical weights at rho = 1, k = 0.5, u = 0.4.
inline constexpr double w1_k0p5_u0p4 = 2.5836961014362026402;
inline constexpr double w2_k0p5_u0p4 = 2.5348541466081697070;
inline constexpr double w3_k0p5_u0p4 = 2.3823277575884961180;

// Rep3 couplings read off the quantum curve at eta = 0.3, k = 0.5, u = 0.37, J1 = 1.
inline constexpr double J2_curve = 1.0272099121494793852;
inline constexpr double J3_curve = 1.0898527411937598919;

// Associated Legendre functions with the Condon-Shortley phase.
inline constexpr double P_2_1_0p3 = -0.85854528127525108424;
inline constexpr double P_3_2_m0p4 = -5.0400000000000000000;
inline constexpr double P_4_m2_0p6 = 0.020266666666666666667;
inline constexpr double P_5_3_0p1 = 47.060169559691080654;
inline constexpr double P_6_0_0p75 = -0.28077697753906250000;

// Constants c(n,h) with  integral = c * r^n e^{ih phi} P_n^h(cos theta).
inline const std::complex<double> c_1_0{6.2831853071795864769, 3.7165646126725964425e-43};
inline const std::complex<double> c_2_0{6.2831853071795864769, 1.486625845069038577e-42};
inline const std::complex<double> c_2_1{-2.8896070210544972178e-43, -2.0943951023931954923};
inline const std::complex<double> c_3_2{-0.31415926535897932385, -3.9226498360464226223e-43};
inline const std::complex<double> c_3_m1{-1.241269007569693438e-40, 18.849555921538759431};

// Automorphism count of the truncated icosahedron graph (networkx VF2).
inline constexpr unsigned long long c60_automorphisms = 120;

}  // namespace frozen
