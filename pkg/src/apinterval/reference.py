"""Published numbers used as regression targets.

Published values are rounded up in the last printed digit. The alpha grid
(TABLE1) and the alpha column of the parameter table (TABLE2) disagree in a
handful of cells (for example 10^35 / 0.001: 5.0102 vs 5.1002); both are
kept as printed.
"""

TABLE1_EPS = (1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0)

# q0 -> alpha for each eps in TABLE1_EPS
TABLE1 = {
    5e4: (19.228, 15.550, 12.245, 9.4357, 6.9684, 4.8430),
    1e10: (9.8356, 8.5912, 7.4255, 6.3398, 5.3418, 4.4761),
    1e15: (7.6121, 6.8799, 6.1816, 5.5174, 4.8905, 4.3256),
    1e20: (6.5919, 6.0799, 5.5864, 5.1114, 4.6565, 4.2373),
    1e25: (6.0079, 5.6164, 5.2364, 4.8678, 4.5116, 4.1783),
    1e30: (5.6298, 5.3137, 5.0053, 4.7047, 4.4123, 4.1357),
    1e35: (5.3649, 5.0102, 4.8411, 4.5875, 4.3396, 4.1032),
    1e40: (5.1688, 4.9414, 4.7181, 4.4989, 4.2839, 4.0776),
    1e45: (5.0178, 4.8185, 4.6225, 4.4295, 4.2398, 4.0567),
    1e50: (4.8979, 4.7205, 4.5459, 4.3737, 4.2039, 4.0394),
    1e55: (4.8003, 4.6407, 4.4832, 4.3276, 4.1740, 4.0247),
    1e60: (4.7192, 4.5742, 4.4308, 4.2890, 4.1488, 4.0121),
    1e65: (4.6509, 4.5179, 4.3864, 4.2562, 4.1272, 4.0011),
    1e70: (4.5924, 4.4697, 4.3482, 4.2278, 4.1084, 3.9915),
    1e75: (4.5418, 4.4280, 4.3151, 4.2031, 4.0920, 3.9829),
    1e80: (4.4976, 4.3914, 4.2860, 4.1814, 4.0774, 3.9753),
    1e85: (4.4587, 4.3591, 4.2603, 4.1621, 4.0645, 3.9684),
    1e90: (4.4240, 4.3304, 4.2373, 4.1448, 4.0528, 3.9622),
    1e95: (4.3931, 4.3046, 4.2168, 4.1293, 4.0423, 3.9565),
    1e100: (4.3652, 4.2815, 4.1982, 4.1153, 4.0328, 3.9513),
}

# (q0, eps, u, m, H, alpha)
TABLE2 = (
    (5e4, 0.0001, 0.086, 14, 514998, 19.228),
    (5e4, 0.001, 0.092, 13, 47292, 15.550),
    (5e4, 0.01, 0.098, 12, 4311, 12.245),
    (5e4, 0.1, 0.004, 14, 528, 9.4357),
    (5e4, 1, 0.01, 15, 57.8, 6.9684),
    (5e4, 10, 0.037, 11, 4.4219, 4.8430),
    (1e10, 0.0001, 0.056, 20, 741876, 9.8356),
    (1e10, 0.001, 0.058, 19, 70330, 8.5912),
    (1e10, 0.01, 0.060, 18, 6632, 7.4254),
    (1e10, 0.1, 0.061, 17, 630, 6.3398),
    (1e10, 1, 0.057, 16, 62.5, 5.3418),
    (1e10, 10, 0.028, 17, 6.75, 4.4761),
    (1e15, 0.0001, 0.043, 25, 948594, 7.6121),
    (1e15, 0.001, 0.045, 24, 90920, 6.8799),
    (1e15, 0.01, 0.046, 23, 8713, 6.1816),
    (1e15, 0.1, 0.046, 22, 839, 5.5174),
    (1e15, 1, 0.043, 21, 83.6, 4.8905),
    (1e15, 10, 0.024, 22, 8.84, 4.3256),
    (1e20, 0.0001, 0.035, 30, 1152223, 6.5919),
    (1e20, 0.001, 0.036, 29, 111390, 6.0799),
    (1e20, 0.01, 0.037, 28, 10762, 5.5864),
    (1e20, 0.1, 0.037, 27, 1045, 5.1114),
    (1e20, 1, 0.035, 26, 105, 4.6565),
    (1e20, 10, 0.021, 27, 10.9, 4.2373),
    (1e25, 0.0001, 0.030, 35, 1353117, 6.0079),
    (1e25, 0.001, 0.030, 34, 131618, 5.6164),
    (1e25, 0.01, 0.031, 33, 12786, 5.2364),
    (1e25, 0.1, 0.031, 32, 1247, 4.8678),
    (1e25, 1, 0.029, 31, 125, 4.5116),
    (1e25, 10, 0.019, 32, 12.9, 4.1783),
    (1e30, 0.0001, 0.026, 40, 1553007, 5.6298),
    (1e30, 0.001, 0.026, 39, 151626, 5.3137),
    (1e30, 0.01, 0.026, 38, 14802, 5.0053),
    (1e30, 0.1, 0.026, 37, 1449, 4.7046),
    (1e30, 1, 0.025, 36, 145, 4.4123),
    (1e30, 10, 0.017, 37, 15, 4.1357),
    (1e35, 0.0001, 0.023, 45, 1751630, 5.3649),
    (1e35, 0.001, 0.023, 44, 171503, 5.1002),
    (1e35, 0.01, 0.023, 43, 16791, 4.8411),
    (1e35, 0.1, 0.023, 42, 1648, 4.5875),
    (1e35, 1, 0.022, 41, 165, 4.3396),
    (1e35, 10, 0.016, 42, 16.9, 4.1032),
    (1e40, 0.0001, 0.020, 50, 1950568, 5.1688),
    (1e40, 0.001, 0.021, 49, 191213, 4.9414),
    (1e40, 0.01, 0.021, 48, 18763, 4.7181),
    (1e40, 0.1, 0.021, 47, 1846, 4.4989),
    (1e40, 1, 0.020, 46, 185, 4.2839),
    (1e40, 10, 0.014, 47, 18.9, 4.0776),
    (1e45, 0.0001, 0.018, 55, 2114784, 5.0178),
    (1e45, 0.001, 0.019, 54, 210928, 4.8185),
    (1e45, 0.01, 0.019, 53, 20736, 4.6225),
    (1e45, 0.1, 0.019, 52, 2043, 4.4295),
    (1e45, 1, 0.018, 51, 204, 4.2398),
    (1e45, 10, 0.013, 52, 20.9, 4.0567),
    (1e50, 0.0001, 0.017, 60, 2342931, 4.8979),
    (1e50, 0.001, 0.017, 59, 230659, 4.7206),
    (1e50, 0.01, 0.017, 58, 22710, 4.5459),
    (1e50, 0.1, 0.017, 57, 2240, 4.3737),
    (1e50, 1, 0.016, 56, 224, 4.2039),
    (1e50, 10, 0.012, 57, 22.9, 4.0394),
    (1e55, 0.0001, 0.016, 64, 2538632, 4.8003),
    (1e55, 0.001, 0.016, 64, 250167, 4.6407),
    (1e55, 0.01, 0.016, 63, 24661, 4.4832),
    (1e55, 0.1, 0.015, 62, 2338, 4.3276),
    (1e55, 1, 0.015, 61, 244, 4.1740),
    (1e55, 10, 0.012, 62, 24.8, 4.0247),
    (1e60, 0.0001, 0.015, 69, 2731576, 4.7192),
    (1e60, 0.001, 0.015, 68, 269639, 4.5742),
    (1e60, 0.01, 0.014, 68, 26639, 4.4308),
    (1e60, 0.1, 0.014, 67, 2633, 4.2890),
    (1e60, 1, 0.014, 66, 263, 4.1488),
    (1e60, 10, 0.011, 67, 26.8, 4.0121),
    (1e65, 0.0001, 0.014, 74, 2927544, 4.6509),
    (1e65, 0.001, 0.014, 73, 289140, 4.5179),
    (1e65, 0.01, 0.014, 72, 28660, 4.3864),
    (1e65, 0.1, 0.013, 72, 2829, 4.2562),
    (1e65, 1, 0.013, 71, 283, 4.1272),
    (1e65, 10, 0.010, 72, 28.7, 4.0011),
    (1e70, 0.0001, 0.013, 79, 3122581, 4.5924),
    (1e70, 0.001, 0.013, 78, 308647, 4.4697),
    (1e70, 0.01, 0.013, 77, 30511, 4.3482),
    (1e70, 0.1, 0.013, 76, 3021, 4.2278),
    (1e70, 1, 0.012, 76, 302, 4.1084),
    (1e70, 10, 0.010, 77, 30.7, 3.9915),
    (1e75, 0.0001, 0.012, 84, 3317736, 4.5418),
    (1e75, 0.001, 0.012, 83, 328165, 4.4280),
    (1e75, 0.01, 0.012, 82, 32465, 4.3151),
    (1e75, 0.1, 0.012, 81, 3216, 4.2031),
    (1e75, 1, 0.011, 81, 322, 4.0920),
    (1e75, 10, 0.009, 81, 32.6, 3.9829),
    (1e80, 0.0001, 0.011, 89, 3513060, 4.4976),
    (1e80, 0.001, 0.011, 88, 347700, 4.3914),
    (1e80, 0.01, 0.011, 87, 34417, 4.2860),
    (1e80, 0.1, 0.011, 86, 3311, 4.1814),
    (1e80, 1, 0.011, 86, 341, 4.0774),
    (1e80, 10, 0.009, 86, 34.5, 3.9753),
    (1e85, 0.0001, 0.011, 94, 3704920, 4.4587),
    (1e85, 0.001, 0.011, 93, 366878, 4.3591),
    (1e85, 0.01, 0.011, 92, 36335, 4.2603),
    (1e85, 0.1, 0.010, 91, 3607, 4.1621),
    (1e85, 1, 0.010, 90, 361, 4.0645),
    (1e85, 10, 0.008, 91, 35.5, 3.9684),
    (1e90, 0.0001, 0.010, 98, 3900103, 4.4240),
    (1e90, 0.001, 0.010, 98, 386427, 4.3331),
    (1e90, 0.01, 0.010, 97, 38290, 4.2373),
    (1e90, 0.1, 0.010, 96, 3799, 4.1448),
    (1e90, 1, 0.010, 95, 380, 4.0528),
    (1e90, 10, 0.008, 96, 37.4, 3.9623),
    (1e95, 0.0001, 0.010, 103, 4091636, 4.3931),
    (1e95, 0.001, 0.010, 102, 405566, 4.3046),
    (1e95, 0.01, 0.010, 101, 40204, 4.2168),
    (1e95, 0.1, 0.009, 101, 3995, 4.1293),
    (1e95, 1, 0.009, 100, 399, 4.0423),
    (1e95, 10, 0.008, 101, 40.3, 3.9565),
    (1e100, 0.0001, 0.009, 108, 4287331, 4.3652),
    (1e100, 0.001, 0.009, 107, 425137, 4.2815),
    (1e100, 0.01, 0.009, 106, 41161, 4.1982),
    (1e100, 0.1, 0.009, 105, 4186, 4.1153),
    (1e100, 1, 0.009, 105, 419, 4.0328),
    (1e100, 10, 0.007, 106, 42.3, 3.9513),
)

def table1_alpha(q0, eps):
    return TABLE1[q0][TABLE1_EPS.index(eps)]


def table2_row(q0, eps):
    for row in TABLE2:
        if row[0] == q0 and row[1] == eps:
            return row
    raise KeyError((q0, eps))


# (q0, eps) cells sampled for replay and optimisation checks
SAMPLED_CELLS = (
    (5e4, 1e-4), (5e4, 10), (1e10, 1e-2), (1e10, 1), (1e30, 1e-4), (1e30, 1),
    (1e30, 10), (1e60, 1e-2), (1e60, 10), (1e100, 1e-4), (1e100, 1e-2), (1e100, 10),
)

# single operating point quoted for the seven-cube application
OPERATING_POINT = dict(q0=1e32, eps=1.9, u=0.022, m=38, H=80.8, alpha=4.3060)

# alpha at q >= 1e30, eps = log 3: older explicit bounds, new weight alone,
# single zero-free region, and the full two-region argument
COMPARISON_CHAIN = dict(older=10.690, smoothing=10.562, single_region=7.281, full=4.401)

CLUSTERING_LOG_N = 68509
INEQUALITY_LOG_N = 70341
HEADLINE_LOG_N = 71000
