"""Check linear-programming certificates for maximal codes and minimal designs."""

from fractions import Fraction as F

from tavoid.certify import avoid_set, certify_design, certify_max, dgs_three_distance_bound
from tavoid.polyexpr import parse_poly

# codes on S^22 with s = 7/15 that avoid (-1/3, -1/15)
f = parse_poly("(t+3/5)^2*(t+1/3)*(t+1/15)*(t-1/5)^2*(t-7/15)")
cert = certify_max(f.to_poly(), 23, F(7, 15), avoid_set([(F(-1, 3), F(-1, 15))]), str(f))
print("max-code bound:", cert.bound, "valid:", cert.valid)
print("  zeros where equality forces inner products:", cert.attainment["zeros_in_region"])

# the same polynomial fails once nothing is avoided: it is positive inside the gap
bare = certify_max(f.to_poly(), 23, F(7, 15), avoid_set([]))
print("without T:", bare.checks["sign"])

# designs on S^15 avoiding two intervals
g = parse_poly("(t+1)*t^2*(t+1/2)*(t+1/4)*(t-1/4)*(t-1/2)")
T = avoid_set([(F(-1, 2), F(-1, 4)), (F(1, 4), F(1, 2))])
d = certify_design(g.to_poly(), 16, 7, T, str(g))
print("design bound:", d.bound, "valid:", d.valid)

# three-distance sets: closed form and the cubic certificate agree
r = dgs_three_distance_bound(23, F(-9, 23), F(-1, 23), F(7, 23))
print("three-distance bound:", r.bound, "cubic certificate agrees:", r.consistent)
