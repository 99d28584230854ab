"""Hermite interpolation certificates for energy lower bounds."""

from fractions import Fraction as F

from tavoid.atlas.catalog import construct
from tavoid.certify import avoid_set
from tavoid.designs import Potential, energy, profile
from tavoid.exactnum import format_rational
from tavoid.interpolate import build_energy_certificate, srg_quadratic

I = [F(-1, 2), F(-1, 5), F(1, 10), F(2, 5)]
T = avoid_set([(F(-1, 2), F(-1, 5))])
code = profile(construct("c11178"))

for h in (Potential.riesz(1), Potential.riesz(2), Potential.exponential(1)):
    cert = build_energy_certificate(h, I, T, 23, 11178)
    print(h.describe(), "valid:", cert.valid)
    print("  nodes:", [format_rational(t) for t in cert.multiset.nodes])
    print("  bound:", cert.to_json()["bound"])
    print("  code :", energy(code, h) if h.is_rational else energy(code, h).mid)

# a strongly regular graph: Petersen, spectral embedding on S^3
h = Potential.riesz(1)
q = srg_quadratic(h, F(-2, 3), F(1, 6), 4)
print("Petersen quadratic:", q.g, " bound:", q.bound(10))
print("direct energy      :", energy(profile(construct("srg:petersen:second")), h))
