"""Published reference values for the strawberry analysis and its companion
replication study, keyed by table preset name.

Each strawberry entry carries (estimate, standard error) pairs per
parameter; each study entry carries (mean, standard deviation across
replications) pairs. ``gof`` blocks hold the published chi-square, the
intercept-model comparison statistic C, and AIC. A handful of published
cells are typographically corrupted in the source (table11 homogeneous
interval columns, the whole table18 random-effect column, which also lacks
its f2 row); values are stored as printed.
"""

from __future__ import annotations

PUBLISHED: dict[str, dict] = {
    "table2": {
        "kind": "strawberry",
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-2.171, 0.287),
                "c2": (-0.669, 0.27),
                "m2": (0.117, 0.211),
                "m3": (-0.121, 0.212),
                "f2": (0.679, 0.248),
                "f3": (0.594, 0.253),
                "f4": (1.015, 0.248),
                "b2": (0.696, 0.252),
                "b3": (0.819, 0.245),
                "b4": (0.103, 0.25),
            }, "gof": {
                "chi2": 146.1, "chi2_df": 86, "chi2_p": 0.0,
                "C": 35.0, "C_df": 8, "C_p": 0.0,
                "aic": 384.1,
            }},
            "univariate": {"params": {
                "c1": (-2.388, 0.422),
                "c2": (-0.75, 0.406),
                "m2": (0.142, 0.321),
                "m3": (-0.177, 0.325),
                "f2": (0.789, 0.378),
                "f3": (0.692, 0.381),
                "f4": (1.138, 0.379),
                "b2": (0.75, 0.378),
                "b3": (0.869, 0.375),
                "b4": (0.107, 0.378),
                "sigma": (0.671, 0.141),
                "icc": (0.12, 0.045),
            }, "gof": {
                "chi2": 70.0, "chi2_df": 86, "chi2_p": 0.895,
                "C": 16.1, "C_df": 8, "C_p": 0.041,
                "aic": 370.5,
            }},
        },
    },
    "table3": {
        "kind": "strawberry",
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (-1.076, 0.236),
                "c2": (-0.929, 0.204),
                "m2": (0.076, 0.146),
                "m3": (-0.068, 0.147),
                "f2": (0.506, 0.175),
                "f3": (0.432, 0.176),
                "f4": (0.721, 0.175),
                "b2": (0.48, 0.172),
                "b3": (0.57, 0.172),
                "b4": (0.076, 0.174),
            }, "gof": {
                "chi2": 145.5, "chi2_df": 86, "chi2_p": 0.0,
                "C": 35.3, "C_df": 8, "C_p": 0.0,
                "aic": 383.7,
            }},
            "univariate": {"params": {
                "c1": (-1.305, 0.332),
                "c2": (-0.964, 0.299),
                "m2": (0.094, 0.228),
                "m3": (-0.115, 0.231),
                "f2": (0.586, 0.27),
                "f3": (0.49, 0.271),
                "f4": (0.824, 0.273),
                "b2": (0.548, 0.267),
                "b3": (0.654, 0.269),
                "b4": (0.094, 0.268),
                "sigma": (0.473, 0.104),
                "icc": (0.064, 0.026),
            }, "gof": {
                "chi2": 71.6, "chi2_df": 86, "chi2_p": 0.868,
                "C": 16.8, "C_df": 8, "C_p": 0.032,
                "aic": 370.5,
            }},
        },
    },
    "table4": {
        "kind": "strawberry",
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-2.021, 0.265),
                "c2": (-1.068, 0.25),
                "m2": (0.062, 0.188),
                "m3": (-0.127, 0.19),
                "f2": (0.613, 0.223),
                "f3": (0.478, 0.226),
                "f4": (0.92, 0.223),
                "b2": (0.568, 0.223),
                "b3": (0.777, 0.22),
                "b4": (0.091, 0.225),
            }, "gof": {
                "chi2": 147.1, "chi2_df": 86, "chi2_p": 0.0,
                "C": 35.4, "C_df": 8, "C_p": 0.0,
                "aic": 383.6,
            }},
            "univariate": {"params": {
                "c1": (-2.221, 0.39),
                "c2": (-1.106, 0.375),
                "m2": (0.078, 0.292),
                "m3": (-0.189, 0.297),
                "f2": (0.709, 0.345),
                "f3": (0.571, 0.347),
                "f4": (1.048, 0.347),
                "b2": (0.64, 0.343),
                "b3": (0.859, 0.343),
                "b4": (0.088, 0.344),
                "sigma": (0.616, 0.128),
                "icc": (0.104, 0.039),
            }, "gof": {
                "chi2": 68.6, "chi2_df": 86, "chi2_p": 0.916,
                "C": 16.7, "C_df": 8, "C_p": 0.03,
                "aic": 368.9,
            }},
        },
    },
    "table5": {
        "kind": "strawberry",
        "link": "po",
        "columns": {
            "bivariate": {"params": {
                "c1": (-2.427, 0.428),
                "c2": (-0.797, 0.417),
                "m2": (0.178, 0.328),
                "m3": (-0.121, 0.337),
                "f2": (0.801, 0.381),
                "f3": (0.751, 0.396),
                "f4": (1.143, 0.381),
                "b2": (0.803, 0.385),
                "b3": (0.84, 0.384),
                "b4": (0.118, 0.382),
                "sigma1": (0.609, 0.185),
                "sigma2": (0.738, 0.171),
                "rho": (0.933, 0.165),
                "icc": (0.348, 0.098),
            }, "gof": {
                "chi2": 61.3, "chi2_df": 86, "chi2_p": 0.98,
                "C": 16.1, "C_df": 8, "C_p": 0.041,
                "aic": 373.8,
            }},
        },
    },
    "table6": {
        "kind": "strawberry",
        "link": "acl",
        "columns": {
            "bivariate": {"params": {
                "c1": (-1.293, 0.335),
                "c2": (-1.006, 0.31),
                "m2": (0.116, 0.229),
                "m3": (-0.065, 0.237),
                "f2": (0.587, 0.271),
                "f3": (0.532, 0.278),
                "f4": (0.822, 0.272),
                "b2": (0.577, 0.268),
                "b3": (0.623, 0.273),
                "b4": (0.098, 0.27),
                "sigma1": (0.404, 0.255),
                "sigma2": (0.652, 0.198),
                "rho": (0.493, 0.77),
                "icc": (0.205, 0.074),
            }, "gof": {
                "chi2": 60.1, "chi2_df": 86, "chi2_p": 0.985,
                "C": 16.5, "C_df": 8, "C_p": 0.036,
                "aic": 373.4,
            }},
        },
    },
    "table7": {
        "kind": "strawberry",
        "link": "crl",
        "columns": {
            "bivariate": {"params": {
                "c1": (-2.23, 0.4),
                "c2": (-1.115, 0.39),
                "m2": (0.074, 0.299),
                "m3": (-0.19, 0.305),
                "f2": (0.713, 0.348),
                "f3": (0.568, 0.364),
                "f4": (1.049, 0.35),
                "b2": (0.642, 0.355),
                "b3": (0.868, 0.347),
                "b4": (0.091, 0.345),
                "sigma1": (0.634, 0.191),
                "sigma2": (0.636, 0.205),
                "rho": (0.884, 0.346),
                "icc": (0.316, 0.09),
            }, "gof": {
                "chi2": 62.3, "chi2_df": 86, "chi2_p": 0.975,
                "C": 16.7, "C_df": 8, "C_p": 0.033,
                "aic": 372.8,
            }},
        },
    },
    "table8": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 0.6,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-1.754, 0.378),
                "c2": (-1.072, 0.374),
                "m2": (0.068, 0.28),
                "m3": (-0.204, 0.293),
                "f2": (0.613, 0.341),
                "f3": (0.481, 0.345),
                "f4": (0.846, 0.358),
                "b2": (0.47, 0.36),
                "b3": (0.709, 0.357),
                "b4": (0.083, 0.368),
            }, "gof": {
                "chi2": 110.2, "chi2_df": 86, "chi2_p": 0.04,
                "C": 34.0, "C_df": 8, "C_p": 0.0,
                "aic": 384.1,
            }},
            "univariate": {"params": {
                "c1": (-1.806, 0.386),
                "c2": (-1.103, 0.382),
                "m2": (0.071, 0.289),
                "m3": (-0.21, 0.303),
                "f2": (0.633, 0.349),
                "f3": (0.494, 0.354),
                "f4": (0.871, 0.365),
                "b2": (0.485, 0.367),
                "b3": (0.732, 0.363),
                "b4": (0.087, 0.381),
                "sigma": (0.287, 0.244),
                "icc": (0.115, 0.087),
            }, "gof": {
                "chi2": 83.0, "chi2_df": 86, "chi2_p": 0.572,
                "C": 22.2, "C_df": 8, "C_p": 0.004,
                "aic": 370.5,
            }},
        },
    },
    "table9": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 0.6,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (0.133, 0.275),
                "c2": (-1.823, 0.26),
                "m2": (0.041, 0.167),
                "m3": (-0.12, 0.176),
                "f2": (0.372, 0.203),
                "f3": (0.295, 0.209),
                "f4": (0.51, 0.208),
                "b2": (0.281, 0.215),
                "b3": (0.42, 0.212),
                "b4": (0.048, 0.22),
            }, "gof": {
                "chi2": 109.6, "chi2_df": 86, "chi2_p": 0.044,
                "C": 35.4, "C_df": 8, "C_p": 0.0,
                "aic": 330.4,
            }},
            "univariate": {"params": {
                "c1": (0.079, 0.286),
                "c2": (-1.83, 0.266),
                "m2": (0.044, 0.173),
                "m3": (-0.125, 0.182),
                "f2": (0.385, 0.209),
                "f3": (0.304, 0.215),
                "f4": (0.527, 0.215),
                "b2": (0.291, 0.22),
                "b3": (0.435, 0.218),
                "b4": (0.051, 0.229),
                "sigma": (0.053, 0.22),
                "icc": (0.047, 0.037),
            }, "gof": {
                "chi2": 82.6, "chi2_df": 86, "chi2_p": 0.584,
                "C": 22.4, "C_df": 8, "C_p": 0.004,
                "aic": 329.6,
            }},
        },
    },
    "table10": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 0.6,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-1.646, 0.339),
                "c2": (-2.031, 0.363),
                "m2": (0.057, 0.247),
                "m3": (-0.179, 0.26),
                "f2": (0.536, 0.302),
                "f3": (0.419, 0.312),
                "f4": (0.728, 0.318),
                "b2": (0.411, 0.322),
                "b3": (0.608, 0.313),
                "b4": (0.074, 0.336),
            }, "gof": {
                "chi2": 112.6, "chi2_df": 86, "chi2_p": 0.029,
                "C": 32.0, "C_df": 8, "C_p": 0.0,
                "aic": 333.8,
            }},
            "univariate": {"params": {
                "c1": (-1.685, 0.345),
                "c2": (-2.045, 0.367),
                "m2": (0.06, 0.254),
                "m3": (-0.183, 0.267),
                "f2": (0.55, 0.308),
                "f3": (0.429, 0.317),
                "f4": (0.747, 0.323),
                "b2": (0.423, 0.328),
                "b3": (0.624, 0.318),
                "b4": (0.076, 0.346),
                "sigma": (0.226, 0.217),
                "icc": (0.131, 0.06),
            }, "gof": {
                "chi2": 89.2, "chi2_df": 86, "chi2_p": 0.385,
                "C": 21.5, "C_df": 8, "C_p": 0.006,
                "aic": 333.6,
            }},
        },
    },
    "table11": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 0.6,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-2.409, 0.354),
                "c2": (-0.888, 0.346),
                "m2": (0.113, 0.302),
                "m3": (-0.185, 0.258),
                "f2": (0.593, 0.345),
                "f3": (0.516, 0.336),
                "f4": (0.919, 0.362),
                "b2": (0.52, 0.304),
                "b3": (0.817, 0.322),
                "b4": (0.074, 0.33),
            }, "gof": {
                "chi2": 127.8, "chi2_df": 86, "chi2_p": 0.002,
                "C": 40.9, "C_df": 8, "C_p": 0.0,
                "aic": 352.6,
            }},
            "univariate": {"params": {
                "c1": (-2.52, 0.382),
                "c2": (-0.93, 0.369),
                "m2": (0.116, 0.317),
                "m3": (-0.197, 0.269),
                "f2": (0.625, 0.365),
                "f3": (0.544, 0.352),
                "f4": (0.967, 0.381),
                "b2": (0.55, 0.323),
                "b3": (0.861, 0.343),
                "b4": (0.081, 0.349),
                "sigma": (0.438, 0.19),
                "icc": (0.176, 0.092),
            }, "gof": {
                "chi2": 82.4, "chi2_df": 86, "chi2_p": 0.59,
                "C": 23.2, "C_df": 8, "C_p": 0.003,
                "aic": 348.6,
            }},
        },
    },
    "table12": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 0.6,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (-1.229, 0.299),
                "c2": (-1.134, 0.276),
                "m2": (0.076, 0.213),
                "m3": (-0.136, 0.183),
                "f2": (0.446, 0.255),
                "f3": (0.389, 0.251),
                "f4": (0.672, 0.257),
                "b2": (0.378, 0.214),
                "b3": (0.585, 0.226),
                "b4": (0.051, 0.244),
            }, "gof": {
                "chi2": 126.7, "chi2_df": 86, "chi2_p": 0.003,
                "C": 43.6, "C_df": 8, "C_p": 0.0,
                "aic": 349.9,
            }},
            "univariate": {"params": {
                "c1": (-1.357, 0.321),
                "c2": (-1.154, 0.292),
                "m2": (0.082, 0.225),
                "m3": (-0.144, 0.192),
                "f2": (0.472, 0.27),
                "f3": (0.413, 0.265),
                "f4": (0.713, 0.272),
                "b2": (0.402, 0.228),
                "b3": (0.622, 0.244),
                "b4": (0.057, 0.262),
                "sigma": (0.224, 0.26),
                "icc": (0.017, 0.043),
            }, "gof": {
                "chi2": 81.0, "chi2_df": 86, "chi2_p": 0.632,
                "C": 23.7, "C_df": 8, "C_p": 0.003,
                "aic": 345.7,
            }},
        },
    },
    "table13": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 0.6,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-2.291, 0.321),
                "c2": (-1.238, 0.32),
                "m2": (0.1, 0.261),
                "m3": (-0.158, 0.228),
                "f2": (0.515, 0.311),
                "f3": (0.451, 0.303),
                "f4": (0.789, 0.322),
                "b2": (0.453, 0.27),
                "b3": (0.696, 0.278),
                "b4": (0.067, 0.301),
            }, "gof": {
                "chi2": 130.7, "chi2_df": 86, "chi2_p": 0.001,
                "C": 37.7, "C_df": 8, "C_p": 0.0,
                "aic": 355.8,
            }},
            "univariate": {"params": {
                "c1": (-2.382, 0.346),
                "c2": (-1.258, 0.336),
                "m2": (0.103, 0.275),
                "m3": (-0.167, 0.238),
                "f2": (0.542, 0.325),
                "f3": (0.475, 0.316),
                "f4": (0.829, 0.337),
                "b2": (0.477, 0.285),
                "b3": (0.733, 0.295),
                "b4": (0.073, 0.316),
                "sigma": (0.362, 0.183),
                "icc": (0.134, 0.078),
            }, "gof": {
                "chi2": 89.7, "chi2_df": 86, "chi2_p": 0.371,
                "C": 22.5, "C_df": 8, "C_p": 0.004,
                "aic": 352.9,
            }},
        },
    },
    "table14": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 0.6,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-1.752, 0.359),
                "c2": (-0.707, 0.353),
                "m2": (0.06, 0.275),
                "m3": (-0.196, 0.276),
                "f2": (0.612, 0.331),
                "f3": (0.486, 0.331),
                "f4": (0.843, 0.345),
                "b2": (0.471, 0.348),
                "b3": (0.703, 0.344),
                "b4": (0.087, 0.358),
            }, "gof": {
                "chi2": 111.3, "chi2_df": 86, "chi2_p": 0.035,
                "C": 36.5, "C_df": 8, "C_p": 0.0,
                "aic": 349.3,
            }},
            "univariate": {"params": {
                "c1": (-1.807, 0.372),
                "c2": (-0.729, 0.363),
                "m2": (0.062, 0.285),
                "m3": (-0.202, 0.287),
                "f2": (0.633, 0.341),
                "f3": (0.501, 0.341),
                "f4": (0.872, 0.355),
                "b2": (0.488, 0.357),
                "b3": (0.727, 0.353),
                "b4": (0.092, 0.372),
                "sigma": (0.274, 0.263),
                "icc": (0.117, 0.086),
            }, "gof": {
                "chi2": 81.6, "chi2_df": 86, "chi2_p": 0.61,
                "C": 23.0, "C_df": 8, "C_p": 0.034,
                "aic": 348.1,
            }},
        },
    },
    "table15": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 0.6,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (-0.359, 0.264),
                "c2": (-1.218, 0.251),
                "m2": (0.04, 0.174),
                "m3": (-0.124, 0.178),
                "f2": (0.396, 0.211),
                "f3": (0.316, 0.215),
                "f4": (0.54, 0.217),
                "b2": (0.3, 0.223),
                "b3": (0.443, 0.219),
                "b4": (0.053, 0.23),
            }, "gof": {
                "chi2": 111.0, "chi2_df": 86, "chi2_p": 0.036,
                "C": 37.0, "C_df": 8, "C_p": 0.0,
                "aic": 348.8,
            }},
            "univariate": {"params": {
                "c1": (-0.417, 0.28),
                "c2": (-1.222, 0.259),
                "m2": (0.042, 0.182),
                "m3": (-0.129, 0.185),
                "f2": (0.411, 0.219),
                "f3": (0.327, 0.223),
                "f4": (0.561, 0.225),
                "b2": (0.313, 0.23),
                "b3": (0.461, 0.227),
                "b4": (0.057, 0.24),
                "sigma": (0.109, 0.217),
                "icc": (0.053, 0.041),
            }, "gof": {
                "chi2": 82.1, "chi2_df": 86, "chi2_p": 0.599,
                "C": 23.1, "C_df": 8, "C_p": 0.003,
                "aic": 347.6,
            }},
        },
    },
    "table16": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 0.6,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-1.631, 0.317),
                "c2": (-1.372, 0.326),
                "m2": (0.049, 0.237),
                "m3": (-0.167, 0.24),
                "f2": (0.524, 0.289),
                "f3": (0.416, 0.293),
                "f4": (0.713, 0.3),
                "b2": (0.404, 0.305),
                "b3": (0.59, 0.297),
                "b4": (0.075, 0.32),
            }, "gof": {
                "chi2": 113.5, "chi2_df": 86, "chi2_p": 0.029,
                "C": 33.7, "C_df": 8, "C_p": 0.0,
                "aic": 352.1,
            }},
            "univariate": {"params": {
                "c1": (-1.673, 0.328),
                "c2": (-1.377, 0.333),
                "m2": (0.05, 0.245),
                "m3": (-0.171, 0.247),
                "f2": (0.54, 0.296),
                "f3": (0.428, 0.298),
                "f4": (0.735, 0.306),
                "b2": (0.418, 0.312),
                "b3": (0.608, 0.303),
                "b4": (0.078, 0.331),
                "sigma": (0.244, 0.192),
                "icc": (0.082, 0.069),
            }, "gof": {
                "chi2": 87.8, "chi2_df": 86, "chi2_p": 0.426,
                "C": 22.3, "C_df": 8, "C_p": 0.004,
                "aic": 351.5,
            }},
        },
    },
    "table17": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 1.5,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-1.43, 0.484),
                "c2": (-0.933, 0.472),
                "m2": (0.081, 0.413),
                "m3": (-0.137, 0.406),
                "f2": (0.531, 0.592),
                "f3": (0.494, 0.517),
                "f4": (0.73, 0.49),
                "b2": (0.399, 0.46),
                "b3": (0.527, 0.461),
                "b4": (0.002, 0.523),
            }, "gof": {
                "chi2": 198.6, "chi2_df": 86, "chi2_p": 0.0,
                "C": 41.5, "C_df": 8, "C_p": 0.0,
                "aic": 396.1,
            }},
            "univariate": {"params": {
                "c1": (-1.749, 0.582),
                "c2": (-1.134, 0.569),
                "m2": (0.111, 0.513),
                "m3": (-0.183, 0.492),
                "f2": (0.652, 0.735),
                "f3": (0.601, 0.642),
                "f4": (0.903, 0.609),
                "b2": (0.497, 0.581),
                "b3": (0.654, 0.57),
                "b4": (0.002, 0.651),
                "sigma": (1.135, 0.206),
                "icc": (0.553, 0.088),
            }, "gof": {
                "chi2": 60.5, "chi2_df": 86, "chi2_p": 0.985,
                "C": 13.3, "C_df": 8, "C_p": 0.102,
                "aic": 347.7,
            }},
        },
    },
    "table18": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 1.5,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (0.67, 0.348),
                "c2": (-2.02, 0.304),
                "m2": (0.046, 0.237),
                "m3": (-0.078, 0.231),
                "f3": (0.305, 0.337),
                "f4": (0.283, 0.296),
                "b2": (0.417, 0.281),
                "b3": (0.227, 0.263),
                "b4": (0.297, 0.264),
            }, "gof": {
                "chi2": 198.0, "chi2_df": 86, "chi2_p": 0.0,
                "C": 42.0, "C_df": 8, "C_p": 0.0,
                "aic": 395.6,
            }},
            "univariate": {"params": {
                "c1": (0.316, 0.405),
                "c2": (-2.034, 0.353),
                "m2": (0.066, 0.301),
                "m3": (-0.105, 0.285),
                "f3": (0.384, 0.428),
                "f4": (0.355, 0.376),
                "b2": (0.529, 0.357),
                "b3": (0.288, 0.338),
                "b4": (0.378, 0.335),
                "sigma": (0.0, 0.381),
                "icc": (0.301, 0.077),
            }, "gof": {
                "chi2": 64.0, "chi2_df": 86, "chi2_p": 0.964,
                "C": 13.3, "C_df": 8, "C_p": 0.102,
                "aic": 347.4,
            }},
        },
    },
    "table19": {
        "kind": "study",
        "generator_link": "po",
        "sigma": 1.5,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-1.347, 0.438),
                "c2": (-2.237, 0.438),
                "m2": (0.071, 0.362),
                "m3": (-0.123, 0.357),
                "f2": (0.468, 0.534),
                "f3": (0.443, 0.46),
                "f4": (0.646, 0.439),
                "b2": (0.352, 0.417),
                "b3": (0.458, 0.407),
                "b4": (0.004, 0.474),
            }, "gof": {
                "chi2": 201.1, "chi2_df": 86, "chi2_p": 0.0,
                "C": 38.8, "C_df": 8, "C_p": 0.0,
                "aic": 398.8,
            }},
            "univariate": {"params": {
                "c1": (-1.62, 0.519),
                "c2": (-2.299, 0.51),
                "m2": (0.102, 0.445),
                "m3": (-0.155, 0.427),
                "f2": (0.566, 0.645),
                "f3": (0.527, 0.562),
                "f4": (0.782, 0.532),
                "b2": (0.434, 0.513),
                "b3": (0.564, 0.496),
                "b4": (0.001, 0.579),
                "sigma": (0.967, 0.24),
                "icc": (0.481, 0.092),
            }, "gof": {
                "chi2": 71.6, "chi2_df": 86, "chi2_p": 0.868,
                "C": 13.2, "C_df": 8, "C_p": 0.102,
                "aic": 357.0,
            }},
        },
    },
    "table20": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 1.5,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-1.828, 0.59),
                "c2": (-0.77, 0.569),
                "m2": (0.088, 0.464),
                "m3": (-0.209, 0.512),
                "f2": (0.563, 0.55),
                "f3": (0.576, 0.527),
                "f4": (0.777, 0.504),
                "b2": (0.327, 0.504),
                "b3": (0.581, 0.54),
                "b4": (-0.029, 0.582),
            }, "gof": {
                "chi2": 247.5, "chi2_df": 86, "chi2_p": 0.0,
                "C": 49.8, "C_df": 8, "C_p": 0.0,
                "aic": 449.8,
            }},
            "univariate": {"params": {
                "c1": (-2.356, 0.761),
                "c2": (-0.977, 0.741),
                "m2": (0.119, 0.615),
                "m3": (-0.296, 0.674),
                "f2": (0.756, 0.74),
                "f3": (0.768, 0.692),
                "f4": (1.049, 0.658),
                "b2": (0.441, 0.678),
                "b3": (0.772, 0.72),
                "b4": (-0.043, 0.78),
                "sigma": (1.328, 0.202),
                "icc": (0.63, 0.072),
            }, "gof": {
                "chi2": 64.4, "chi2_df": 86, "chi2_p": 0.961,
                "C": 13.8, "C_df": 8, "C_p": 0.093,
                "aic": 375.8,
            }},
        },
    },
    "table21": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 1.5,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (-0.415, 0.441),
                "c2": (-1.297, 0.398),
                "m2": (0.063, 0.304),
                "m3": (-0.132, 0.338),
                "f2": (0.377, 0.362),
                "f3": (0.384, 0.357),
                "f4": (0.515, 0.343),
                "b2": (0.21, 0.334),
                "b3": (0.375, 0.353),
                "b4": (-0.018, 0.386),
            }, "gof": {
                "chi2": 246.1, "chi2_df": 86, "chi2_p": 0.0,
                "C": 51.9, "C_df": 8, "C_p": 0.0,
                "aic": 447.7,
            }},
            "univariate": {"params": {
                "c1": (-1.049, 0.57),
                "c2": (-1.354, 0.525),
                "m2": (0.085, 0.425),
                "m3": (-0.201, 0.466),
                "f2": (0.531, 0.518),
                "f3": (0.538, 0.493),
                "f4": (0.733, 0.464),
                "b2": (0.3, 0.467),
                "b3": (0.528, 0.494),
                "b4": (-0.037, 0.544),
                "sigma": (0.912, 0.154),
                "icc": (0.448, 0.083),
            }, "gof": {
                "chi2": 67.6, "chi2_df": 86, "chi2_p": 0.929,
                "C": 13.8, "C_df": 8, "C_p": 0.088,
                "aic": 374.0,
            }},
        },
    },
    "table22": {
        "kind": "study",
        "generator_link": "acl",
        "sigma": 1.5,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-1.722, 0.527),
                "c2": (-1.417, 0.499),
                "m2": (0.072, 0.398),
                "m3": (-0.178, 0.443),
                "f2": (0.486, 0.486),
                "f3": (0.493, 0.453),
                "f4": (0.669, 0.436),
                "b2": (0.278, 0.436),
                "b3": (0.491, 0.463),
                "b4": (-0.029, 0.51),
            }, "gof": {
                "chi2": 250.8, "chi2_df": 86, "chi2_p": 0.0,
                "C": 45.7, "C_df": 8, "C_p": 0.0,
                "aic": 453.9,
            }},
            "univariate": {"params": {
                "c1": (-2.189, 0.676),
                "c2": (-1.458, 0.648),
                "m2": (0.1, 0.54),
                "m3": (-0.256, 0.589),
                "f2": (0.648, 0.645),
                "f3": (0.659, 0.6),
                "f4": (0.904, 0.573),
                "b2": (0.375, 0.587),
                "b3": (0.658, 0.625),
                "b4": (-0.046, 0.681),
                "sigma": (1.138, 0.192),
                "icc": (0.556, 0.083),
            }, "gof": {
                "chi2": 77.5, "chi2_df": 86, "chi2_p": 0.732,
                "C": 13.8, "C_df": 8, "C_p": 0.087,
                "aic": 390.1,
            }},
        },
    },
    "table23": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 1.5,
        "link": "po",
        "columns": {
            "none": {"params": {
                "c1": (-1.416, 0.464),
                "c2": (-0.648, 0.441),
                "m2": (0.085, 0.399),
                "m3": (-0.135, 0.397),
                "f2": (0.518, 0.577),
                "f3": (0.482, 0.509),
                "f4": (0.719, 0.478),
                "b2": (0.392, 0.451),
                "b3": (0.518, 0.446),
                "b4": (0.004, 0.507),
            }, "gof": {
                "chi2": 207.4, "chi2_df": 86, "chi2_p": 0.035,
                "C": 43.0, "C_df": 8, "C_p": 0.0,
                "aic": 422.9,
            }},
            "univariate": {"params": {
                "c1": (-1.735, 0.563),
                "c2": (-0.785, 0.538),
                "m2": (0.109, 0.496),
                "m3": (-0.181, 0.485),
                "f2": (0.643, 0.718),
                "f3": (0.59, 0.632),
                "f4": (0.892, 0.599),
                "b2": (0.496, 0.572),
                "b3": (0.649, 0.559),
                "b4": (0.007, 0.632),
                "sigma": (1.13, 0.202),
                "icc": (0.552, 0.086),
            }, "gof": {
                "chi2": 61.4, "chi2_df": 86, "chi2_p": 0.979,
                "C": 13.4, "C_df": 8, "C_p": 0.099,
                "aic": 370.3,
            }},
        },
    },
    "table24": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 1.5,
        "link": "acl",
        "columns": {
            "none": {"params": {
                "c1": (0.194, 0.347),
                "c2": (-1.446, 0.287),
                "m2": (0.05, 0.242),
                "m3": (-0.082, 0.238),
                "f2": (0.315, 0.348),
                "f3": (0.292, 0.308),
                "f4": (0.434, 0.291),
                "b2": (0.236, 0.274),
                "b3": (0.31, 0.271),
                "b4": (0.006, 0.308),
            }, "gof": {
                "chi2": 207.1, "chi2_df": 86, "chi2_p": 0.0,
                "C": 43.4, "C_df": 8, "C_p": 0.0,
                "aic": 422.5,
            }},
            "univariate": {"params": {
                "c1": (-0.176, 0.412),
                "c2": (-1.44, 0.343),
                "m2": (0.068, 0.311),
                "m3": (-0.112, 0.299),
                "f2": (0.403, 0.448),
                "f3": (0.372, 0.395),
                "f4": (0.557, 0.375),
                "b2": (0.306, 0.356),
                "b3": (0.4, 0.354),
                "b4": (0.005, 0.398),
                "sigma": (0.699, 0.13),
                "icc": (0.326, 0.079),
            }, "gof": {
                "chi2": 66.1, "chi2_df": 86, "chi2_p": 0.945,
                "C": 13.3, "C_df": 8, "C_p": 0.102,
                "aic": 371.2,
            }},
        },
    },
    "table25": {
        "kind": "study",
        "generator_link": "crl",
        "sigma": 1.5,
        "link": "crl",
        "columns": {
            "none": {"params": {
                "c1": (-1.318, 0.412),
                "c2": (-1.609, 0.39),
                "m2": (0.071, 0.341),
                "m3": (-0.119, 0.342),
                "f2": (0.444, 0.506),
                "f3": (0.419, 0.441),
                "f4": (0.62, 0.419),
                "b2": (0.336, 0.4),
                "b3": (0.438, 0.385),
                "b4": (0.008, 0.448),
            }, "gof": {
                "chi2": 209.3, "chi2_df": 86, "chi2_p": 0.029,
                "C": 40.0, "C_df": 8, "C_p": 0.0,
                "aic": 425.9,
            }},
            "univariate": {"params": {
                "c1": (-1.592, 0.494),
                "c2": (-1.611, 0.461),
                "m2": (0.097, 0.425),
                "m3": (-0.152, 0.414),
                "f2": (0.546, 0.617),
                "f3": (0.505, 0.542),
                "f4": (0.758, 0.514),
                "b2": (0.425, 0.496),
                "b3": (0.549, 0.481),
                "b4": (0.008, 0.551),
                "sigma": (0.96, 0.182),
                "icc": (0.472, 0.091),
            }, "gof": {
                "chi2": 72.1, "chi2_df": 86, "chi2_p": 0.858,
                "C": 13.3, "C_df": 8, "C_p": 0.102,
                "aic": 380.6,
            }},
        },
    },
}


def published_table(name: str) -> dict:
    """Look up a published table by preset name, e.g. ``table2``."""
    try:
        return PUBLISHED[name]
    except KeyError:
        raise ValueError(
            f"unknown table preset {name!r}; available: table2 .. table25"
        ) from None
