"""Fit the four competing models to all 12 regions and compare with the published grid."""

from zetatail.data import PUBLISHED_BEST, PUBLISHED_COMPARISON, REGIONS
from zetatail.fit import COMPARISON_FAMILIES, compare_models


def main() -> None:
    print("region\tfamily\tp_value\tp_published\taic\taic_published\tstars")
    matched = 0
    for rec in REGIONS:
        rows = {r.fit.family: r for r in compare_models(rec.counts)}
        for fam in COMPARISON_FAMILIES:
            r = rows[fam]
            p_pub, aic_pub = PUBLISHED_COMPARISON[rec.slug][fam]
            stars = ("p" if r.best_p else "") + ("A" if r.best_aic else "")
            print(f"{rec.slug}\t{fam}\t{r.gof.p_value:.4f}\t{p_pub:.4f}\t{r.fit.aic:.2f}\t{aic_pub:.2f}\t{stars}")
        best_p, best_aic = PUBLISHED_BEST[rec.slug]
        matched += rows[best_p].best_p and rows[best_aic].best_aic
    print(f"# regions whose starred models match: {matched}/12")


if __name__ == "__main__":
    main()
