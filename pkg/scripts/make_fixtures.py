"""Write the named fixture files used by the tests and README examples."""

from pathlib import Path

from depspace import instances
from depspace.fileformat import serialize_graph, serialize_matrix, serialize_space

OUT = Path(__file__).resolve().parents[1] / "fixtures"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    spaces = {
        "fixture-u23.json": instances.fixture_u23(),
        "fixture-nontransitive.json": instances.fixture_nontransitive(),
        "fixture-star.json": instances.fixture_star(),
        "fixture-u24.json": instances.gen_uniform(4, 2),
        "fixture-fano.json": instances.gen_binary(instances.fano_rows()),
        "fixture-triangle.json": instances.gen_graphic(instances.triangle_graph()),
    }
    for name, space in spaces.items():
        (OUT / name).write_text(serialize_space(space))
    (OUT / "graph-triangle.json").write_text(serialize_graph(instances.triangle_graph()))
    (OUT / "graph-square-chord.json").write_text(serialize_graph(instances.square_chord_graph()))
    (OUT / "matrix-fano.json").write_text(serialize_matrix(instances.fano_rows()))
    for p in sorted(OUT.iterdir()):
        print(p.relative_to(OUT.parent))


if __name__ == "__main__":
    main()
