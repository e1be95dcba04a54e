"""Exhaustive isomorph-free classification of caps in PG(d,2), d <= 6."""

from .canonical import (CanonicalRecord, NotSpanning, canonical,
                        canonical_key, equivalent, stabilizer_order)
from .catalog import (CatalogFile, Fixture, FixtureResult, ParseError,
                      catalog_from_levels, format_report, format_table1,
                      levels_from_catalog, parse, parse_fixtures, report_ok,
                      serialize, table1, verify_fixtures)
from .classifier import (CandidateClass, CandidateClasses, ClassNode,
                         LevelSet, classify, largest_complete,
                         partition_candidates, root)
from .geometry import (DegenerateLine, DimensionMismatch, NotACap, Space,
                       ZeroVector, candidate_set, coords_of, format_points,
                       has_frame, is_cap, is_complete, iter_points,
                       mask_from_points, parse_points, point_from_coords,
                       points_of, space, spans, third_point)
from .linalg import (LinearMap, SingularTuple, apply, apply_set, compose,
                     gl_order, identity, inverse, map_from_preimages,
                     random_map)

__version__ = "0.1.0"
