# detector kinds
RPD = "rpd"
KRPD = "krpd"
KRPD_RFF = "krpd-rff"
KPCA = "kpca"
KNN = "knn"
DETECTOR_KINDS = (RPD, KRPD, KRPD_RFF, KPCA, KNN)
DEPTH_DETECTORS = (RPD, KRPD, KRPD_RFF)
DETECTOR_LABELS = {
    RPD: "RPD",
    KRPD: "KRPD",
    KRPD_RFF: "KRPD-RFF",
    KPCA: "KPCA",
    KNN: "kNN",
}

# kernel families
RBF_KERNEL = "rbf"
LINEAR_KERNEL = "linear"
KERNEL_FAMILIES = (RBF_KERNEL, LINEAR_KERNEL)

# toy dataset kinds
UNIMODAL = "unimodal"
MULTIMODAL = "multimodal"
CROSS = "cross"
MOONS = "moons"
TOY_KINDS = (UNIMODAL, MULTIMODAL, CROSS, MOONS)

# toy dataset geometry
TOY_INLIERS = 300
TOY_OUTLIERS = 100
TOY_OUTLIER_BOX = (-6.0, 6.0)
TOY_GAUSSIAN_SCALE = 0.3
TOY_NOISE = 0.05
MULTIMODAL_CENTERS = ((-2.0, -2.0), (2.0, -2.0), (0.0, 2.0))
CROSS_SEGMENT_LENGTH = 6.0
MOONS_RADIUS = 1.0
MOONS_LOWER_CENTER = (1.0, 0.5)

# labels
INLIER = 0
OUTLIER = 1

# csv format
LABEL_COLUMN = "label"
FEATURE_COLUMN_PREFIX = "f"
CSV_FLOAT_FORMAT = "{:.17g}"
CSV_READ_ENCODING = "utf-8-sig"  # tolerates a byte order mark
SCORE_COLUMN = "score"

# kernel and eigen tolerances
SYMMETRY_TOLERANCE = 1e-12
JACOBI_TOLERANCE = 1e-12  # relative to the Frobenius norm
JACOBI_MAX_SWEEPS = 100
RANK_ABSOLUTE_FLOOR = 1e-10
RANK_RELATIVE_FLOOR = 1e-12
EIGH_SOLVER = "eigh"
JACOBI_SOLVER = "jacobi"
EIGENSOLVERS = (EIGH_SOLVER, JACOBI_SOLVER)
DEFAULT_EIGENSOLVER = EIGH_SOLVER

# depth
MAD_RELATIVE_FLOOR = 1e-12
SCORING_BATCH_SIZE = 2048  # queries scored at once (memory ~ batch x L)

# hyperparameter defaults (L is fixed for both depth detectors)
DEFAULT_DIRECTIONS = 1000
DEFAULT_GAMMA = 0.25
DEFAULT_COMPONENTS = 100
DEFAULT_KPCA_COMPONENTS = 10
DEFAULT_RFF_FEATURES = 100
DEFAULT_NEIGHBORS = 5
DEFAULT_SEED = 0

# search space
GAMMA_RANGE = (1e-5, 1.0)
COMPONENTS_RANGE = (10, 500)
NEIGHBOR_CHOICES = (1, 5, 10, 20)
DEFAULT_SEARCH_BUDGET = 25
CV_FOLDS = 5

# benchmark protocol
TRAIN_FRACTION = 0.6
DEFAULT_TRIALS = 5
DEFAULT_CONTAMINATION = 0.25
BENCHMARK_DETECTORS = (RPD, KRPD, KRPD_RFF, KPCA, KNN)
ABLATION_WITHOUT_KPCA = "w/o KPCA (RFF)"
ABLATION_WITH_KPCA = "w/ KPCA"
BENCHMARK_TABLE_COLUMNS = (
    "dataset",
    "detector",
    "auc_mean",
    "auc_std",
    "gamma",
    "M",
    "L",
    "seconds",
)

# grid dumps
GRID_BOUNDS = (-6.0, 6.0, -6.0, 6.0)
GRID_RESOLUTION = 200
GRID_THRESHOLD_FOOTER = "# threshold={}"

# exit codes
EXIT_SUCCESS = 0
EXIT_USAGE_ERROR = 1
EXIT_DATA_ERROR = 2
EXIT_NUMERICAL_ERROR = 3

# environment variables
ENV_PREFIX = "KRPD"

# benchmark datasets: name -> (samples, dims, outlier percentage)
ODDS_DATASETS = {
    "arrhythmia": (452, 274, 14.6),
    "cardio": (1831, 21, 9.61),
    "ionosphere": (351, 33, 35.9),
    "letter": (1600, 32, 6.25),
    "mnist": (7603, 100, 9.21),
    "musk": (3062, 166, 3.17),
    "optdigits": (5216, 64, 2.88),
    "pendigits": (6870, 16, 2.27),
    "satellite": (6435, 36, 31.6),
    "satimage-2": (5803, 36, 1.22),
    "vowels": (1456, 12, 3.43),
    "wbc": (378, 30, 5.56),
}
ODDS_OUTLIER_TOLERANCE = 0.5  # percentage points
