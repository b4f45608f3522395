"""Tally how often seeded random delta families break each property.

    python scripts/random_survey.py --n 5 --max-size 2 --trials 200
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from depspace.axioms import check_transitivity_idempotence
from depspace.instances import gen_random
from depspace.properties import eis_scan, enumerate_bases, steinitz_scan


@dataclass
class SurveyConfig:
    n: int = 5
    members: int = 3
    max_size: int = 2
    trials: int = 200
    seed: int = 0


def survey(cfg: SurveyConfig) -> Counter:
    tally = Counter()
    for t in range(cfg.trials):
        space = gen_random(cfg.n, cfg.members, cfg.max_size, cfg.seed + t)
        transitive = check_transitivity_idempotence(space).holds
        tally["transitive" if transitive else "non-transitive"] += 1
        if not eis_scan(space).holds:
            tally["eis-fails" + ("" if not transitive else " (transitive!)")] += 1
        if not steinitz_scan(space).holds:
            tally["steinitz-fails"] += 1
        if not enumerate_bases(space).equicardinal:
            tally["bases-unequal" + ("" if not transitive else " (transitive!)")] += 1
    return tally


def main() -> None:
    p = argparse.ArgumentParser()
    for name, default in vars(SurveyConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = SurveyConfig(**vars(p.parse_args()))
    tally = survey(cfg)
    print(cfg)
    for key in sorted(tally):
        print(f"{key:>28}: {tally[key]}")


if __name__ == "__main__":
    main()
