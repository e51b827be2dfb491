#pragma once

// Blown-up plane fixture, kept in sync with data/blowup_plane.rings and the
// data/*.input files (a CLI test checks they agree).

namespace resint::cli::fixtures {

inline constexpr const char* kRings = R"(# The plane with point class p, and its blow-up at a point.
ring plane
basis 1:0 h:1 p:2
mul h h = p
integral p = 1
end

ring blown_up_plane
basis 1:0 h:1 e:1 P:2
mul h h = P
mul e e = -P
integral P = 1
pushforward plane
push 1 = 1
push h = h
push e = 0
push P = p
end
)";

// W = {x^2 = y^2 = 0} in the plane, p = {x = y = 0}, N = O(2) + O(2).
// Blowing up p first: the divisor is e and the residual to it is e again.
inline constexpr const char* kPointFirst = R"(ring = blown_up_plane
d = 2
k = 2
cN = 1 + 4*h + 4*P
method = divisor
labels = p, R(p)
divisor = e
segre_D = e + P
segre_R = e + P
segre_W = 2*e + 4*P
)";

// Blowing up R(p) = {x^2, xy, y^2} first: the divisor is 2e, nothing is left.
inline constexpr const char* kResidualFirst = R"(ring = blown_up_plane
d = 2
k = 2
cN = 1 + 4*h + 4*P
method = divisor
labels = R(p), p
divisor = 2*e
segre_D = 2*e + 4*P
segre_R = 0
segre_W = 2*e + 4*P
)";

// Symmetric form with both exceptional pieces equal to e.
inline constexpr const char* kSymmetric = R"(ring = blown_up_plane
d = 2
k = 2
cN = 1 + 4*h + 4*P
method = symmetric
labels = Z1, Z2
E1 = e
E2 = e
)";

}  // namespace resint::cli::fixtures
