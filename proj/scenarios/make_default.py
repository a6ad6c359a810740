"""Regenerates the bundled default scenario and its placeholder history files.

The histories are synthetic: smooth trends of plausible magnitude plus seeded
noise drawn from the ARIMA orders pinned in the scenario. Replace the CSV files
with observed data to run a real analysis.
"""

import json
from pathlib import Path

import numpy as np

HERE = Path(__file__).resolve().parent
FIRST, LAST = 1991, 2021
YEARS = np.arange(FIRST, LAST + 1)
N = len(YEARS)
rng = np.random.default_rng(7)


def arma(n, ar=(), ma=(), sigma=1.0, burn=200):
    e = rng.normal(0.0, sigma, n + burn)
    x = np.zeros(n + burn)
    for t in range(n + burn):
        x[t] = e[t]
        for i, a in enumerate(ar, 1):
            if t - i >= 0:
                x[t] += a * x[t - i]
        for j, b in enumerate(ma, 1):
            if t - j >= 0:
                x[t] += b * e[t - j]
    return x[burn:]


def integrate(x, d):
    for _ in range(d):
        x = np.cumsum(x)
    return x


def walk(x):
    return np.concatenate(([0.0], np.cumsum(x)))


t = np.arange(N, dtype=float)
history = {
    # Quadratic trend plus ARIMA(0,2,1)-style curvature noise.
    "VMT_US": (2.15e12 + 3.6e10 * t + 1.0e8 * t**2 + integrate(arma(N, ma=(-0.4,), sigma=4e9), 2), "vehicle-miles"),
    "P": (3.95e6 + 4.0e3 * t + 25.0 * t**2 + integrate(arma(N, ma=(-0.3,), sigma=250.0), 2), "persons"),
    "VSL": (5.1e6 + 1.9e5 * t + 800.0 * t**2 + integrate(arma(N, sigma=900.0), 2), "USD"),
    "MHI": (30500.0 + 550.0 * t + integrate(arma(N, sigma=350.0), 1), "USD"),
    "A_soy": (4.75e6 + arma(N, sigma=1.5e5), "acres"),
    "A_corn": (3.30e6 + arma(N, sigma=1.2e5), "acres"),
    "A_wheat": (0.55e6 + arma(N, sigma=4.0e4), "acres"),
    "Y_soy": (38.0 + 0.45 * t + walk(arma(N - 1, ar=(0.3,), ma=(-0.5, 0.1, 0.1), sigma=1.2)), "bushels/acre"),
    "Y_corn": (125.0 + 1.6 * t + walk(arma(N - 1, ar=(0.2,), ma=(-0.6, 0.2), sigma=5.0)), "bushels/acre"),
    "Y_wheat": (60.0 + 0.6 * t + walk(arma(N - 1, ar=(0.2, -0.2, 0.1), ma=(-0.5,), sigma=2.5)), "bushels/acre"),
    "price_soy": (9.8 + arma(N, sigma=0.9), "USD/bushel"),
    "price_corn": (4.3 + arma(N, ar=(0.5,), ma=(0.2,), sigma=0.45), "USD/bushel"),
    "price_wheat": (4.2 + 0.05 * t + walk(arma(N - 1, ar=(0.3, -0.2), ma=(-0.4,), sigma=0.35)), "USD/bushel"),
    "L": (1.15e6 + 2.0e3 * t + walk(arma(N - 1, ma=(-0.5,), sigma=9.0e3)), "head"),
}

orders = {
    "VMT_US": [0, 2, 1], "P": [0, 2, 1], "VSL": [0, 2, 0], "MHI": [0, 1, 0],
    "A_soy": [0, 0, 0], "A_corn": [0, 0, 0], "A_wheat": [0, 0, 0],
    "Y_soy": [1, 1, 3], "Y_corn": [1, 1, 2], "Y_wheat": [3, 1, 1],
    "price_soy": [0, 0, 0], "price_corn": [1, 0, 1], "price_wheat": [2, 1, 1],
    "L": [0, 1, 1],
}

for name, (values, unit) in history.items():
    lines = [f"# unit: {unit}", "year,value"]
    lines += [f"{y},{v:.6f}" for y, v in zip(YEARS, values)]
    (HERE / "history" / f"{name}.csv").write_text("\n".join(lines) + "\n")

mhi = history["MHI"][0]
horizon = list(range(2022, 2033))
h = np.arange(len(horizon), dtype=float)

constants = {
    "VTTS_2015": 17.25, "MHI_2015": round(float(mhi[2015 - FIRST]), 2), "s": 50, "d1": 50,
    "A_g": 0.6, "A_a": 0.3, "seats_per_evtol": 4,
    "V_2019": 343.303, "U_2019": 211.553, "CAGR": 0.538, "parcels_2022": 6.5e9,
    "parcel_fraction": 0.86, "operational_days": 284, "R_t": 24, "m": 10, "n": 250, "q": 30,
    "C_c": 4000, "C_o": 800, "ATS": 13, "VDTS": 3.61, "reserve_fraction": 0.25,
    "p_e": 525, "p_t": 24000, "c_t": 1.417, "c_e": 34, "f_e": 0.44,
    "warehouse_rent": 0.79, "warehouse_size": 39631, "warehouse_nnn": 0.25,
    "warehouse_wage": 27867, "area_per_worker": 138,
    "I": 400, "alpha": 1200, "TLCT": 8, "RLCT": 4, "ADV": 10,
    "snooper_core": 3143, "snooper_offhours": 4152, "drone_core": 522, "drone_offhours": 735,
    "core_share": 0.8, "drone_capable_count": 200, "occupancy": 1,
    "y_uplift": 0.025, "x_uplift": 0.033, "d_corn": 11.58, "d_soy": 2.28, "d_wheat": 2.57,
    "farms_large": 13893, "farms_total": 77805,
    "ST1": 26, "ST2": 104, "l_c": 980, "FL": 13.93,
    "ohca_per_100k": 55,
    "DSN": [0, 50, 200, 500, 750, 1015],
    "p_s": [0.123, 0.129, 0.133, 0.138, 0.140, 0.144],
    "CAS": [0, 14752, 31905, 55792, 73160, 76495],
    "SCC": 51, "SCM": 1200, "SCN": 1500, "scc_discount": 0.03, "scc_base_year": 2020,
    "MPG": 22.5, "F_eq": 0.993, "g_C": 8.89e-3, "F_f": 0.35, "Tr_US": 4.11e11,
}

shares = 0.03 * 1.22 ** h
exogenous = {
    "D": {"first_year": 2022, "values": [round(v) for v in 120000 * 1.28 ** h], "unit": "passengers"},
    "P_US": {"first_year": 2022, "values": [round(v) for v in 3.333e8 * 1.005 ** h], "unit": "persons"},
    "T": {"tonnage": {"total_tons": 2.0e6, "payload_constant": "p_e", "first_year": 2022,
                      "shares": [round(float(v), 6) for v in shares]}, "unit": "trips"},
    "tax": {"first_year": 2022, "values": [round(369e6 / 1.633 ** (2032 - y), 2) for y in horizon], "unit": "USD"},
    "capex": {"first_year": 2022, "values": [round(v, 2) for v in 1.2e9 * 0.85 ** h], "unit": "USD"},
    "opex": {"first_year": 2022, "values": [round(v, 2) for v in 1.5e8 * 1.06 ** h], "unit": "USD"},
}

doc = {
    "notes": [
        "Published constants with synthetic placeholder histories and demand/cost series.",
        "Regenerate with scenarios/make_default.py; replace history/*.csv with observed data.",
    ],
    "horizon": {"first": 2022, "last": 2032},
    "constants": constants,
    "series": {
        "historical": {name: {"file": f"history/{name}.csv"} for name in history},
        "exogenous": exogenous,
    },
    "orders": orders,
    "toggles": {},
}
(HERE / "default.json").write_text(json.dumps(doc, indent=2) + "\n")
