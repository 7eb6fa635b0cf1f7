"""outlier detectors sharing one interface: fit on a DataCloud, score
queries with higher values meaning more outlying"""
import constants
from DetectorErrors import InvalidParameterError, NotFittedError, ModelFileError
from Kernels import KernelSpec, fit_gram
from KernelPCA import fit_kpca, kpca_from_dict
from NearestNeighbors import fit_knn, KnnModel
from ParameterValidation import verify_positive_real, verify_integer
from ProjectionDepth import fit_rpd, fit_krpd, scorer_from_dict
from RandomFourierFeatures import fit_krpd_rff, rff_from_dict
from RandomGenerators import verify_seed
from DataCloud import DataCloud


class Detector:
    """base class for more specific detectors

    :param _seed: seed of every random draw made while fitting
    :type _seed: int
    :param _model: fitted model (None before fit)
    :type _model: object
    """

    kind = None

    def __init__(self, seed=constants.DEFAULT_SEED):
        verify_seed(seed)
        self._seed = seed
        self._model = None

    @property
    def name(self):
        return constants.DETECTOR_LABELS[self.kind]

    @property
    def seed(self):
        return self._seed

    @property
    def model(self):
        return self._model

    @property
    def is_fitted(self):
        return self._model is not None

    @property
    def hyperparameters(self):
        return {}

    def fit(self, cloud):
        """fits detector on cloud and returns self"""
        self._model = self._fit_model(cloud)
        return self

    def score(self, queries):
        """returns outlier scores of queries"""
        if self._model is None:
            raise NotFittedError(self.name)
        return self._score_model(queries)

    def _fit_model(self, cloud):
        raise NotImplementedError

    def _score_model(self, queries):
        raise NotImplementedError

    def to_dict(self):
        """plain dictionary with kind, hyperparameters and fitted model"""
        if self._model is None:
            raise NotFittedError(self.name)
        return {
            "kind": self.kind,
            "seed": int(self._seed),
            "hyperparameters": self.hyperparameters,
            "model": self._model_to_dict(),
        }


class DepthDetector(Detector):
    """common part of detectors scored by negative projection depth"""

    def __init__(self, n_directions=constants.DEFAULT_DIRECTIONS, seed=0):
        super().__init__(seed)
        verify_integer("n_directions", n_directions, 1)
        self._n_directions = int(n_directions)

    @property
    def n_directions(self):
        return self._n_directions

    def _score_model(self, queries):
        return self._model.outlier_score(queries)


class RpdDetector(DepthDetector):
    kind = constants.RPD

    @property
    def hyperparameters(self):
        return {"n_directions": self._n_directions}

    def _fit_model(self, cloud):
        return fit_rpd(cloud, self._n_directions, self._seed)

    def _model_to_dict(self):
        return {"scorer": self._model.to_dict()}


class KrpdDetector(DepthDetector):
    kind = constants.KRPD

    def __init__(
        self,
        gamma=constants.DEFAULT_GAMMA,
        n_components=constants.DEFAULT_COMPONENTS,
        n_directions=constants.DEFAULT_DIRECTIONS,
        seed=0,
        eigensolver=constants.DEFAULT_EIGENSOLVER,
    ):
        super().__init__(n_directions, seed)
        verify_positive_real("gamma", gamma)
        verify_integer("n_components", n_components, 1)
        self._gamma = float(gamma)
        self._n_components = int(n_components)
        self._eigensolver = eigensolver

    @property
    def hyperparameters(self):
        return {
            "gamma": self._gamma,
            "n_components": self._n_components,
            "n_directions": self._n_directions,
        }

    @property
    def effective_components(self):
        if self._model is None:
            return None
        return self._model.embedding.n_components

    def _fit_model(self, cloud):
        spec = KernelSpec(constants.RBF_KERNEL, self._gamma)
        return fit_krpd(
            cloud,
            spec,
            self._n_components,
            self._n_directions,
            self._seed,
            self._eigensolver,
        )

    def _model_to_dict(self):
        return {
            "scorer": self._model.to_dict(),
            "kpca": self._model.embedding.to_dict(),
        }


class RffDetector(DepthDetector):
    kind = constants.KRPD_RFF

    def __init__(
        self,
        gamma=constants.DEFAULT_GAMMA,
        n_features=constants.DEFAULT_RFF_FEATURES,
        n_directions=constants.DEFAULT_DIRECTIONS,
        seed=0,
    ):
        super().__init__(n_directions, seed)
        verify_positive_real("gamma", gamma)
        verify_integer("n_features", n_features, 1)
        self._gamma = float(gamma)
        self._n_features = int(n_features)

    @property
    def hyperparameters(self):
        return {
            "gamma": self._gamma,
            "n_features": self._n_features,
            "n_directions": self._n_directions,
        }

    def _fit_model(self, cloud):
        return fit_krpd_rff(
            cloud, self._gamma, self._n_features, self._n_directions, self._seed
        )

    def _model_to_dict(self):
        return {
            "scorer": self._model.to_dict(),
            "rff": self._model.embedding.to_dict(),
        }


class KpcaDetector(Detector):
    """kernel PCA reconstruction error in feature space"""

    kind = constants.KPCA

    def __init__(
        self,
        gamma=constants.DEFAULT_GAMMA,
        n_components=constants.DEFAULT_KPCA_COMPONENTS,
        seed=0,
        eigensolver=constants.DEFAULT_EIGENSOLVER,
    ):
        super().__init__(seed)
        verify_positive_real("gamma", gamma)
        verify_integer("n_components", n_components, 1)
        self._gamma = float(gamma)
        self._n_components = int(n_components)
        self._eigensolver = eigensolver

    @property
    def hyperparameters(self):
        return {"gamma": self._gamma, "n_components": self._n_components}

    def _fit_model(self, cloud):
        spec = KernelSpec(constants.RBF_KERNEL, self._gamma)
        return fit_kpca(fit_gram(spec, cloud), self._n_components, self._eigensolver)

    def _score_model(self, queries):
        return self._model.reconstruction_error_score(queries)

    def _model_to_dict(self):
        return {"kpca": self._model.to_dict()}


class KnnDetector(Detector):
    """distance to the k-th nearest training point"""

    kind = constants.KNN

    def __init__(self, k=constants.DEFAULT_NEIGHBORS, seed=0):
        super().__init__(seed)
        verify_integer("k", k, 1)
        self._k = int(k)

    @property
    def hyperparameters(self):
        return {"k": self._k}

    def _fit_model(self, cloud):
        return fit_knn(cloud, self._k)

    def _score_model(self, queries):
        return self._model.score(queries)

    def _model_to_dict(self):
        return self._model.to_dict()


DETECTOR_CLASSES = {
    constants.RPD: RpdDetector,
    constants.KRPD: KrpdDetector,
    constants.KRPD_RFF: RffDetector,
    constants.KPCA: KpcaDetector,
    constants.KNN: KnnDetector,
}


def make_detector(kind, hyperparameters=None, seed=constants.DEFAULT_SEED):
    """returns unfitted detector of kind built from hyperparameters"""
    if kind not in DETECTOR_CLASSES:
        raise InvalidParameterError("detector", kind, f"one of {constants.DETECTOR_KINDS}")
    hyperparameters = dict(hyperparameters or {})
    try:
        return DETECTOR_CLASSES[kind](seed=seed, **hyperparameters)
    except TypeError as error:
        raise InvalidParameterError(
            "hyperparameters", hyperparameters, f"arguments of {kind}: {error}"
        ) from None


def detector_from_dict(data, path="<model>"):
    """rebuilds a fitted detector from Detector.to_dict output"""
    try:
        kind = data["kind"]
        detector = make_detector(kind, data["hyperparameters"], data["seed"])
        model_data = data["model"]
        if kind == constants.RPD:
            model = scorer_from_dict(model_data["scorer"])
        elif kind == constants.KRPD:
            embedding = kpca_from_dict(model_data["kpca"])
            model = scorer_from_dict(model_data["scorer"], embedding)
        elif kind == constants.KRPD_RFF:
            embedding = rff_from_dict(model_data["rff"])
            model = scorer_from_dict(model_data["scorer"], embedding)
        elif kind == constants.KPCA:
            model = kpca_from_dict(model_data["kpca"])
        else:
            features = DataCloud(model_data["training_features"]).features
            model = KnnModel(features, int(model_data["k"]))
    except (KeyError, TypeError) as error:
        raise ModelFileError(path, f"missing or malformed field {error}") from error
    detector._model = model
    return detector
