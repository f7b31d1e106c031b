"""Write SVG pictures of the test fixtures and of a few inclusion diagrams to ./figures."""
from pathlib import Path

from oneone import braid as br
from oneone import diagram as dg
from oneone.render import render_svg

out = Path("figures")
out.mkdir(exist_ok=True)
data = Path(__file__).resolve().parent.parent / "tests" / "data"
for path in sorted(data.glob("*.json")):
    try:
        D = dg.load(path)
    except Exception as e:
        print(f"skip {path.name}: {e}")
        continue
    (out / f"{path.stem}.svg").write_text(render_svg(D))
    print(f"{path.stem}: {len(dg.intersections(D))} intersections, {dg.coherence(D)}")

for (w, b, m), f in [((7, 4, 2), "1/0"), ((7, 4, 2), "8/3"), ((7, 4, 2), "2/1"), ((7, 2, 4), "1/1")]:
    K = br.braid_validate(w, b, m)
    D = br.inclusion_diagram(K, f)
    name = f"K{w}_{b}_{m}_{f.replace('/', '-')}"
    (out / f"{name}.svg").write_text(render_svg(D))
    print(f"{name}: {len(dg.intersections(D))} intersections, {dg.coherence(D)}")
