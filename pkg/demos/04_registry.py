"""Re-derive the whole certificate table and summarise the outcome."""

from collections import Counter

from tavoid.registry import reproduce_all

rows = reproduce_all()
print(Counter(r["status"] for r in rows))
for r in rows:
    for e in r["errata"]:
        print(f"{r['id']:26} {e['field']:16} printed {e['printed']!s:28.28} computed {e['computed']!s:.40}")
