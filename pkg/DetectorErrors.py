"""contains all custom errors

errors are grouped in three families, the command line maps each family
to its own exit code:
InvalidParameterError - usage error
DataError - problem with input data or files
NumericalError - computation could not produce a usable result
"""


class DetectorError(Exception):
    pass


class InvalidParameterError(DetectorError):
    def __init__(self, name, value, requirement):
        super().__init__(f"invalid {name}={value!r}, expected {requirement}")
        self._name = name
        self._value = value

    @property
    def name(self):
        return self._name

    @property
    def value(self):
        return self._value


class DataError(DetectorError):
    pass


class DataFileError(DataError):
    def __init__(self, path, reason):
        super().__init__(f"cannot access data file {path}: {reason}")
        self._path = path


class MissingColumnError(DataError):
    def __init__(self, path, column):
        super().__init__(f"column '{column}' not found in header of {path}")
        self._column = column


class RaggedRowError(DataError):
    def __init__(self, row, expected, found):
        super().__init__(
            f"row {row} has {found} cells, header declares {expected} columns"
        )
        self._row = row


class NonNumericCellError(DataError):
    def __init__(self, row, column, cell):
        super().__init__(
            f"non-numeric value {cell!r} in row {row}, column '{column}'"
        )
        self._row = row
        self._column = column

    @property
    def row(self):
        return self._row

    @property
    def column(self):
        return self._column


class InvalidLabelError(DataError):
    def __init__(self, row, value):
        super().__init__(f"label {value!r} in row {row} is not 0 or 1")
        self._row = row
        self._value = value


class NonFiniteFeatureError(DataError):
    def __init__(self):
        super().__init__("features contain NaN or infinite values")


class EmptyCloudError(DataError):
    def __init__(self):
        super().__init__("data cloud needs at least one sample and one feature")


class MissingLabelsError(DataError):
    def __init__(self):
        super().__init__("labels required")


class ClassTooSmallError(DataError):
    def __init__(self, label, size, required):
        super().__init__(
            f"class {label} has {size} members, at least {required} required"
        )
        self._label = label
        self._size = size


class SingleClassError(DataError):
    def __init__(self):
        super().__init__("both inliers and outliers are required")


class DimensionMismatchError(DataError):
    def __init__(self, expected, found):
        super().__init__(
            f"dimension mismatch: expected d={expected} features, got {found}"
        )
        self._expected = expected
        self._found = found

    @property
    def expected(self):
        return self._expected

    @property
    def found(self):
        return self._found


class EmptyInputError(DataError):
    def __init__(self, what="values"):
        super().__init__(f"{what} must not be empty")


class ModelFileError(DataError):
    def __init__(self, path, reason):
        super().__init__(f"invalid model file {path}: {reason}")
        self._path = path


class NumericalError(DetectorError):
    pass


class DegenerateProjectionError(NumericalError):
    def __init__(self, n_directions):
        super().__init__(
            "degenerate projections: "
            + f"all {n_directions} directions have zero MAD"
        )
        self._n_directions = n_directions


class DegenerateEmbeddingError(NumericalError):
    def __init__(self, threshold):
        super().__init__(
            "kernel PCA found no usable component "
            + f"(all eigenvalues <= {threshold:.3g})"
        )
        self._threshold = threshold


class EigensolverError(NumericalError):
    def __init__(self, solver, reason):
        super().__init__(f"{solver} eigensolver failed: {reason}")
        self._solver = solver


class SearchFailedError(NumericalError):
    def __init__(self, detector, n_trials):
        super().__init__(f"all {n_trials} search trials for {detector} failed")
        self._detector = detector


class NotFittedError(DetectorError):
    def __init__(self, detector):
        super().__init__(f"{detector} detector must be fitted before scoring")
        self._detector = detector
