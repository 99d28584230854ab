"""Build the derived Leech codes and look at their inner-product structure."""

from tavoid.atlas.catalog import construct
from tavoid.designs import design_strength, moments, profile
from tavoid.exactnum import format_rational

for code_id in ("c4600", "c552", "c11178", "c2816", "c2025", "bw16", "dual-golay"):
    p = profile(construct(code_id))
    inner = ", ".join(format_rational(t) for t in p.inner_products)
    print(f"{code_id:11} N={p.N:6} n={p.n}  I={{{inner}}}")
    print(f"{'':11} F={p.distribution}  strength={design_strength(p, 12)}")

# the first nonvanishing moment is what stops a code being a stronger design
p = profile(construct("c2816"))
print("moments of c2816:", [format_rational(m) for m in moments(p, 8)])
