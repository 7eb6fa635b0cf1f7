""" data access layer of program: csv clouds, score files and yaml
model files"""
import csv
import logging
from pathlib import Path

import numpy as np
import yaml

import constants
from DataCloud import DataCloud
from DetectorErrors import (
    DataFileError,
    MissingColumnError,
    RaggedRowError,
    NonNumericCellError,
    InvalidLabelError,
    EmptyCloudError,
    ModelFileError,
)

logger = logging.getLogger(__name__)


def read_rows(path, header_only=False):
    """returns csv rows of file (only the first one when header_only),
    unreadable or undecodable files raise DataFileError"""
    path = Path(path)
    try:
        with path.open(newline="", encoding=constants.CSV_READ_ENCODING) as file:
            reader = csv.reader(file)
            if header_only:
                first = next(reader, None)
                return [] if first is None else [first]
            return list(reader)
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error
    except (UnicodeDecodeError, csv.Error) as error:
        raise DataFileError(path, f"not a readable utf-8 csv ({error})") from None


def read_header(path):
    """returns list of column names from the first row of csv file"""
    rows = read_rows(path, header_only=True)
    if not rows or not rows[0]:
        raise DataFileError(path, "file has no header row")
    return [name.strip() for name in rows[0]]


def has_label_column(path):
    """returns True if csv header contains the label column"""
    return constants.LABEL_COLUMN in read_header(path)


def parse_label(cell, row):
    """returns 0 or 1, accepts '0', '1', '0.0' and '1.0'"""
    try:
        value = float(cell)
    except ValueError:
        raise InvalidLabelError(row, cell) from None
    if value not in (constants.INLIER, constants.OUTLIER):
        raise InvalidLabelError(row, cell)
    return int(value)


def load_csv(path, label_column=None):
    """reads rectangular numeric csv with one header row into DataCloud,
    features keep header order without the label column

    rows are numbered from 1 (first data row) in error messages"""
    path = Path(path)
    header = read_header(path)
    label_position = None
    if label_column is not None:
        if label_column not in header:
            raise MissingColumnError(path, label_column)
        label_position = header.index(label_column)

    rows = []
    labels = []
    for row_number, cells in enumerate(read_rows(path)[1:], start=1):
        if not cells:
            continue
        if len(cells) != len(header):
            raise RaggedRowError(row_number, len(header), len(cells))
        values = []
        for position, cell in enumerate(cells):
            if position == label_position:
                labels.append(parse_label(cell.strip(), row_number))
                continue
            try:
                values.append(float(cell))
            except ValueError:
                raise NonNumericCellError(
                    row_number, header[position], cell
                ) from None
        rows.append(values)

    if not rows or not rows[0]:
        raise EmptyCloudError()
    cloud = DataCloud(np.array(rows), labels if label_column is not None else None)
    logger.info(
        "loaded %s: N=%d, d=%d, labels=%s",
        path,
        cloud.n_samples,
        cloud.n_dims,
        cloud.has_labels,
    )
    return cloud


def load_labelled_csv(path):
    """loads csv, passing labels through when the label column exists"""
    label_column = constants.LABEL_COLUMN if has_label_column(path) else None
    return load_csv(path, label_column=label_column)


def format_float(value):
    return constants.CSV_FLOAT_FORMAT.format(float(value))


def save_csv(cloud, path):
    """writes cloud as csv with columns f0..f{d-1} and optional label"""
    path = Path(path)
    header = [
        f"{constants.FEATURE_COLUMN_PREFIX}{column}" for column in range(cloud.n_dims)
    ]
    if cloud.has_labels:
        header.append(constants.LABEL_COLUMN)
    try:
        with path.open("w", newline="", encoding="utf-8") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            for row in range(cloud.n_samples):
                cells = [format_float(value) for value in cloud.features[row]]
                if cloud.has_labels:
                    cells.append(str(int(cloud.labels[row])))
                writer.writerow(cells)
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error


def write_rows(path, header, rows, footer=None):
    """writes csv rows (values formatted by format_float when real)"""
    path = Path(path)
    try:
        with path.open("w", newline="", encoding="utf-8") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow(
                    [
                        format_float(cell) if isinstance(cell, float) else cell
                        for cell in row
                    ]
                )
            if footer is not None:
                file.write(footer + "\n")
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error


def write_scores(path, scores, labels=None):
    """writes score csv with column score and optional label passthrough"""
    header = [constants.SCORE_COLUMN]
    if labels is not None:
        header.append(constants.LABEL_COLUMN)
        rows = [[float(score), int(label)] for score, label in zip(scores, labels)]
    else:
        rows = [[float(score)] for score in scores]
    write_rows(path, header, rows)


def list_dataset_files(directory):
    """returns sorted list of csv files in directory"""
    directory = Path(directory)
    if not directory.is_dir():
        raise DataFileError(directory, "not a directory")
    return sorted(directory.glob("*.csv"))


def describe_against_registry(name, cloud):
    """warns when a cloud named like a known benchmark set does not
    match its registered shape, returns True if it matches"""
    entry = constants.ODDS_DATASETS.get(name.lower())
    if entry is None:
        return False
    samples, dims, outlier_percentage = entry
    matches = cloud.n_samples == samples and cloud.n_dims == dims
    if cloud.has_labels:
        found = 100.0 * cloud.outlier_fraction
        matches = matches and (
            abs(found - outlier_percentage) <= constants.ODDS_OUTLIER_TOLERANCE
        )
    if not matches:
        logger.warning(
            "%s does not match the registered shape N=%d, d=%d, outliers=%.2f%%",
            name,
            samples,
            dims,
            outlier_percentage,
        )
    return matches


def write_yaml(data, path):
    """writes plain data structure as yaml, keys keep insertion order"""
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8") as file:
            yaml.safe_dump(data, file, sort_keys=False)
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error


def save_model_file(model_data, path):
    """writes dictionary describing a fitted model as yaml"""
    write_yaml(model_data, path)


def load_model_file(path):
    """reads yaml model file into a dictionary"""
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as file:
            model_data = yaml.safe_load(file)
    except OSError as error:
        raise DataFileError(path, error.strerror or str(error)) from error
    except (yaml.YAMLError, UnicodeDecodeError) as error:
        raise ModelFileError(path, str(error)) from error
    if not isinstance(model_data, dict):
        raise ModelFileError(path, "expected a mapping at the top level")
    return model_data
