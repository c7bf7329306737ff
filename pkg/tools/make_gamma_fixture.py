"""Write the 64-point 50-digit Gamma table used by the special-core tests.

Run once with mpmath installed; the output is committed as package data.
"""

import json
from pathlib import Path

import mpmath as mp

mp.mp.dps = 60
OUT = Path(__file__).resolve().parents[1] / "src" / "fracfun" / "data" / "gamma_fixture.json"


def points():
    # 64 doubles spread over [-169.5, 170], kept away from the poles
    zs = [mp.mpf(-169.5) + (mp.mpf(339.5) * k) / 63 for k in range(64)]
    out = []
    for z in zs:
        z = float(z)
        if z <= 0 and abs(z - round(z)) < 0.05:
            z += 0.25
        out.append(z)
    return out


def main():
    rows = []
    for z in points():
        g = mp.gamma(mp.mpf(z))
        rows.append({"z": repr(z), "gamma": mp.nstr(g, 50, min_fixed=1, max_fixed=0)})
    OUT.write_text(json.dumps({"digits": 50, "points": rows}, indent=1) + "\n")
    print(f"wrote {len(rows)} points to {OUT}")


if __name__ == "__main__":
    main()
