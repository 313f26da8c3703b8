"""Versatility measures under a standard lognormal prior, next to the published values."""

import sys

from zetatail.data import PUBLISHED_VERSATILITY
from zetatail.versatility import PARAMETERIZATIONS, table4


def main(nodes: int = 64) -> None:
    keys = list(PARAMETERIZATIONS) + ["geometric0-average"]
    print("family\tparameterization\tv\tpublished\trel_diff")
    for key, rep in zip(keys, table4(nodes)):
        pub = PUBLISHED_VERSATILITY[key]
        print(f"{rep.family}\t{rep.parameterization}\t{rep.v:.5f}\t{pub:.4f}\t{rep.v / pub - 1:+.2%}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 64)
