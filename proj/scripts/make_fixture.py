#!/usr/bin/env python3
"""Generate the acceptance fixture: a deterministic synthetic daily index series
plus golden analysis values computed by an independent pipeline.

The series imitates the shape of a long equity-index history: 16265 business-day
closing values quoted to 2 decimals, drifting from ~16.66 to ~2000, with exactly
124 flat days (zero log-returns) spread 78/26/15/3/2 over the five contiguous
subsets and never on a subset boundary straddle.

Everything downstream of the CSV is computed here from scratch (string-level
digit walk, chi-square from log10 probabilities, scipy moments) so the golden
file exercises the C++ library against an independent implementation.

Writes data/fixture_index.csv and data/fixture_index_golden.json.
Stdlib + numpy/scipy only. Deterministic: fixed PRNG seed, no timestamps.
"""

import datetime
import hashlib
import json
import math
import random
from pathlib import Path

import numpy as np
from scipy import stats as sps

N_CLOSES = 16265
K = 5
CHUNK = N_CLOSES // K              # 3253 closes per subset
RET_CHUNK = CHUNK - 1              # 3252 returns per subset
STRADDLES = {(j + 1) * CHUNK - 1 for j in range(K - 1)}  # return indices dropped by alignment
ZEROS_PER_SUBSET = [78, 26, 15, 3, 2]
SIG = 5
START = 16.66
SEED = 19500103

ROMAN = ["I", "II", "III", "IV", "V"]


# ---------------------------------------------------------------------------
# series construction

def business_days(first: datetime.date, count: int) -> list[datetime.date]:
    out = []
    d = first
    while len(out) < count:
        if d.weekday() < 5:
            out.append(d)
        d += datetime.timedelta(days=1)
    return out


def pick_zero_indices(rng: random.Random) -> set[int]:
    chosen: set[int] = set()
    for j, want in enumerate(ZEROS_PER_SUBSET):
        lo = j * CHUNK
        pool = [i for i in range(lo, lo + RET_CHUNK)]  # excludes the straddle at lo+RET_CHUNK
        chosen.update(rng.sample(pool, want))
    assert not (chosen & STRADDLES)
    return chosen


def build_closes(rng: random.Random, zero_at: set[int]) -> list[float]:
    # lognormal steps sized so the walk ends near 2000 like a long index history
    drift = math.log(1990.0 / START) / (N_CLOSES - 1)
    vol = 0.0097
    closes = [START]
    for i in range(N_CLOSES - 1):
        prev = closes[-1]
        if i in zero_at:
            closes.append(prev)
            continue
        nxt = prev
        while nxt == prev or nxt < 1.0:
            nxt = round(prev * math.exp(rng.gauss(drift, vol)), 2)
        closes.append(nxt)
    return closes


# ---------------------------------------------------------------------------
# independent digit pipeline (string walk over the 15-digit decimal rendering)

def mantissa15(x: float) -> tuple[list[str], int]:
    s = f"{abs(x):.14e}"
    mant, exp = s.split("e")
    return list(mant[0] + mant[2:]), int(exp)


def digits_after_rounding(x: float, sig: int = SIG) -> tuple[int, int, int] | None:
    """(d1, d2, d12) of x rounded to `sig` significant digits; None for zero."""
    if x == 0.0:
        return None
    ds, _ = mantissa15(x)
    if ds[sig] >= "5":  # round half away from zero at the sig-th digit
        i = sig - 1
        while i >= 0 and ds[i] == "9":
            ds[i] = "0"
            i -= 1
        if i < 0:
            ds[0] = "1"
        else:
            ds[i] = str(int(ds[i]) + 1)
    d1 = int(ds[0])
    d2 = int(ds[1]) if sig >= 2 else 0
    return d1, d2, 10 * d1 + d2


def round_sig(x: float, sig: int = SIG) -> float:
    if x == 0.0:
        return 0.0
    ds, e = mantissa15(x)
    if ds[sig] >= "5":
        i = sig - 1
        while i >= 0 and ds[i] == "9":
            ds[i] = "0"
            i -= 1
        if i < 0:
            ds[0] = "1"
            e += 1
        else:
            ds[i] = str(int(ds[i]) + 1)
    out = float(ds[0] + "." + "".join(ds[1:sig]) + f"e{e}")
    return -out if x < 0 else out


class Census:
    def __init__(self) -> None:
        self.first = [0] * 10
        self.second = [0] * 10
        self.pair = [0] * 100
        self.zeros = 0
        self.n = 0

    def add_value(self, x: float) -> None:
        d = digits_after_rounding(x)
        if d is None:
            self.zeros += 1
            return
        d1, d2, d12 = d
        self.first[d1] += 1
        self.second[d2] += 1
        self.pair[d12] += 1
        self.n += 1

    def merge(self, other: "Census") -> None:
        self.first = [a + b for a, b in zip(self.first, other.first)]
        self.second = [a + b for a, b in zip(self.second, other.second)]
        self.pair = [a + b for a, b in zip(self.pair, other.pair)]
        self.zeros += other.zeros
        self.n += other.n


def census_of(values) -> Census:
    c = Census()
    for v in values:
        c.add_value(v)
    return c


# ---------------------------------------------------------------------------
# chi-square against the three digit laws

def law_bins(law: str) -> tuple[list[int], list[float]]:
    if law == "bl1":
        bins = list(range(1, 10))
        probs = [math.log10(1 + 1 / d) for d in bins]
    elif law == "bl2":
        bins = list(range(0, 10))
        probs = [sum(math.log10(1 + 1 / (10 * d1 + d2)) for d1 in range(1, 10)) for d2 in bins]
    elif law == "bl12":
        bins = list(range(10, 100))
        probs = [math.log10(1 + 1 / m) for m in bins]
    else:
        raise ValueError(law)
    return bins, probs


def chi_square(census: Census, law: str) -> float:
    bins, probs = law_bins(law)
    if law == "bl1":
        observed = [census.first[b] for b in bins]
    elif law == "bl2":
        observed = [census.second[b] for b in bins]
    else:
        observed = [census.pair[b] for b in bins]
    n = census.n
    return sum((o - n * p) ** 2 / (n * p) for o, p in zip(observed, probs))


# ---------------------------------------------------------------------------
# descriptive statistics (scipy for the higher moments)

def describe(values) -> dict:
    arr = np.asarray(values, dtype=float)
    row = {
        "count": int(arr.size),
        "min": float(arr.min()),
        "max": float(arr.max()),
        "total": float(arr.sum()),
        "mean": float(arr.mean()),
        "std_dev": float(arr.std(ddof=1)),
    }
    row["skewness"] = float(sps.skew(arr, bias=False)) if arr.size >= 3 and arr.std() > 0 else None
    row["excess_kurtosis"] = (
        float(sps.kurtosis(arr, fisher=True, bias=False)) if arr.size >= 4 and arr.std() > 0 else None
    )
    return row


# ---------------------------------------------------------------------------
# golden assembly

def segment_row(label: str, sign: str, convention: str, values, zeros_hint=None) -> dict:
    c = census_of(values)
    zeros = c.zeros if zeros_hint is None else zeros_hint
    return {
        "label": label,
        "sign": sign,
        "convention": convention,
        "n": c.n,
        "zeros": zeros,
        "first": c.first[1:],
        "second": c.second,
        "first_two": c.pair[10:],
        "chi_bl1": chi_square(c, "bl1"),
        "chi_bl2": chi_square(c, "bl2"),
        "chi_bl12": chi_square(c, "bl12"),
    }


def sign_values(values, sign: str) -> list[float]:
    if sign == "positive":
        return [v for v in values if v > 0.0]
    if sign == "negative":
        return [v for v in values if v < 0.0]
    return [v for v in values if v != 0.0]


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    data_dir = root / "data"
    data_dir.mkdir(exist_ok=True)

    rng = random.Random(SEED)
    zero_at = pick_zero_indices(rng)
    closes = build_closes(rng, zero_at)
    dates = business_days(datetime.date(1950, 1, 3), N_CLOSES)

    csv_path = data_dir / "fixture_index.csv"
    with open(csv_path, "w", newline="\n") as f:
        f.write("Date,Close\n")
        for d, c in zip(dates, closes):
            f.write(f"{d.isoformat()},{c:.2f}\n")
    sha = hashlib.sha256(csv_path.read_bytes()).hexdigest()

    # reparse so the golden reflects the file, not the construction floats
    parsed = [float(line.split(",")[1]) for line in csv_path.read_text().splitlines()[1:]]
    assert len(parsed) == N_CLOSES

    returns = [
        0.0 if b == a else math.log(b / a) for a, b in zip(parsed, parsed[1:])
    ]
    zero_flags = [r == 0.0 for r in returns]
    assert sum(zero_flags) == sum(ZEROS_PER_SUBSET)

    price_subsets = [parsed[j * CHUNK:(j + 1) * CHUNK] for j in range(K)]
    return_subsets = [returns[j * CHUNK:j * CHUNK + RET_CHUNK] for j in range(K)]
    zeros_per_subset = [sum(1 for v in sub if v == 0.0) for sub in return_subsets]
    assert zeros_per_subset == ZEROS_PER_SUBSET

    stats_rows = []
    stats_rows.append({"label": "CV", "kind": "raw", **describe(parsed)})
    stats_rows.append({"label": "LR", "kind": "raw", **describe(returns)})
    stats_rows.append({"label": "CV", "kind": "adjusted", **describe([round_sig(v) for v in parsed])})
    for j, sub in enumerate(price_subsets):
        stats_rows.append({"label": f"CV_{ROMAN[j]}", "kind": "adjusted",
                           **describe([round_sig(v) for v in sub])})
    stats_rows.append({"label": "LR", "kind": "adjusted", **describe([round_sig(v) for v in returns])})
    for j, sub in enumerate(return_subsets):
        stats_rows.append({"label": f"LR_{ROMAN[j]}", "kind": "adjusted",
                           **describe([round_sig(v) for v in sub])})

    segments = []
    segments.append(segment_row("CV", "all", "full", parsed, zeros_hint=0))
    for j, sub in enumerate(price_subsets):
        segments.append(segment_row(f"CV_{ROMAN[j]}", "all", "subset", sub, zeros_hint=0))

    total_zeros = sum(zeros_per_subset)
    for sign, suffix in (("all", ""), ("positive", "+"), ("negative", "-")):
        segments.append(
            segment_row("LR" + suffix, sign, "full", sign_values(returns, sign),
                        zeros_hint=total_zeros))
        aligned = Census()
        for j, sub in enumerate(return_subsets):
            seg_census = census_of(sign_values(sub, sign))
            aligned.merge(seg_census)
            segments.append({
                "label": f"LR_{ROMAN[j]}" + suffix,
                "sign": sign,
                "convention": "subset",
                "n": seg_census.n,
                "zeros": zeros_per_subset[j],
                "first": seg_census.first[1:],
                "second": seg_census.second,
                "first_two": seg_census.pair[10:],
                "chi_bl1": chi_square(seg_census, "bl1"),
                "chi_bl2": chi_square(seg_census, "bl2"),
                "chi_bl12": chi_square(seg_census, "bl12"),
            })
        segments.insert(
            len(segments) - K,
            {
                "label": "LR" + suffix,
                "sign": sign,
                "convention": "aligned",
                "n": aligned.n,
                "zeros": total_zeros,
                "first": aligned.first[1:],
                "second": aligned.second,
                "first_two": aligned.pair[10:],
                "chi_bl1": chi_square(aligned, "bl1"),
                "chi_bl2": chi_square(aligned, "bl2"),
                "chi_bl12": chi_square(aligned, "bl12"),
            },
        )

    nonzero = [v for v in returns if v != 0.0]
    golden = {
        "fixture": {
            "file": "fixture_index.csv",
            "sha256": sha,
            "rows": N_CLOSES,
            "first_date": dates[0].isoformat(),
            "last_date": dates[-1].isoformat(),
            "subsets": K,
            "round_digits": SIG,
        },
        "zeros": {"total": total_zeros, "per_subset": zeros_per_subset},
        "counts": {
            "lr_full_nonzero": len(nonzero),
            "lr_aligned_nonzero": sum(1 for j in range(K) for v in return_subsets[j] if v != 0.0),
            "lr_positive": sum(1 for v in returns if v > 0.0),
            "lr_negative": sum(1 for v in returns if v < 0.0),
        },
        "stats": stats_rows,
        "segments": segments,
    }

    golden_path = data_dir / "fixture_index_golden.json"
    with open(golden_path, "w", newline="\n") as f:
        json.dump(golden, f, indent=1)
        f.write("\n")

    print(f"wrote {csv_path} ({csv_path.stat().st_size} bytes, sha256 {sha})")
    print(f"wrote {golden_path} ({golden_path.stat().st_size} bytes)")
    print(f"closes: {parsed[0]} .. {parsed[-1]}, min {min(parsed)}, max {max(parsed)}")
    print(f"zero returns: {total_zeros} split {zeros_per_subset}")
    print(f"nonzero LR: full {len(nonzero)}, aligned {golden['counts']['lr_aligned_nonzero']}")


if __name__ == "__main__":
    main()
