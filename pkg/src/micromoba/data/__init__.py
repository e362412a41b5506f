from .container import (DatasetError, DatasetFile, DatasetFormatError,
                        DatasetHeader, DatasetWriter, CountMismatchError,
                        HashMismatchError, SchemaMismatchError,
                        TruncatedDatasetError, VersionMismatchError,
                        FORMAT_VERSION)
from .datasets import (DatasetStats, ValidationReport, dataset_stats,
                       mix_datasets, read_dataset, validate_dataset,
                       write_dataset)
from .records import EpisodeRecord, HeroFrame, StepFrame

__all__ = [
    "DatasetError", "DatasetFile", "DatasetFormatError", "DatasetHeader",
    "DatasetWriter", "CountMismatchError", "HashMismatchError",
    "SchemaMismatchError", "TruncatedDatasetError", "VersionMismatchError",
    "FORMAT_VERSION", "DatasetStats", "ValidationReport", "dataset_stats",
    "mix_datasets", "read_dataset", "validate_dataset", "write_dataset",
    "EpisodeRecord", "HeroFrame", "StepFrame",
]
