"""Exception hierarchy shared across the engine."""


class SkillmapError(Exception):
    """Base class for all engine errors."""


# --- document intake ---

class UnsupportedFormat(SkillmapError):
    pass


class OversizeDocument(SkillmapError):
    pass


class EncodingError(SkillmapError):
    pass


class FormatMismatch(SkillmapError):
    pass


class MalformedMarkup(SkillmapError):
    pass


class EmptyDocument(SkillmapError):
    pass


# --- embedding ---

class ZeroVector(SkillmapError):
    pass


class NonFinite(SkillmapError):
    pass


class EmptyInput(SkillmapError):
    pass


class MissingEmbedding(SkillmapError):
    pass


# --- index / persistence ---

class DimensionMismatch(SkillmapError):
    pass


class DuplicateId(SkillmapError):
    pass


class EmptyCatalog(SkillmapError):
    pass


class FormatError(SkillmapError):
    pass


class ChecksumError(SkillmapError):
    pass


class IoError(SkillmapError):
    pass


# --- catalogs / validation ---

class CatalogError(SkillmapError):
    pass


class CatalogTooSmall(SkillmapError):
    pass


class MissingAltLabels(SkillmapError):
    pass
