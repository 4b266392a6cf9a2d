"""Exception hierarchy for the migration pipeline."""


class PipelineError(Exception):
    """Base class for all pipeline errors."""


# -- workspace ---------------------------------------------------------------

class ConfigError(PipelineError):
    pass


class MissingSources(PipelineError):
    pass


class BaselineTestFailure(PipelineError):
    pass


class StageFailure(PipelineError):
    """A pipeline stage failed; carries the stage name and the cause."""

    def __init__(self, stage: str, cause: Exception | str):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")


# -- C frontend --------------------------------------------------------------

class PreprocessError(PipelineError):
    pass


class UnresolvedInclude(PreprocessError):
    def __init__(self, header: str, diagnostic: str = ""):
        self.header = header
        super().__init__(f"unresolved include: {header}" + (f" ({diagnostic})" if diagnostic else ""))


class ParseError(PipelineError):
    pass


# -- refactoring -------------------------------------------------------------

class BuildFailure(PipelineError):
    pass


# -- dependence graph / skeleton ---------------------------------------------

class CycleDetected(PipelineError):
    pass


class SkeletonBuildFailure(PipelineError):
    pass


class UnknownApi(PipelineError):
    pass


# -- model gateway -----------------------------------------------------------

class EndpointError(PipelineError):
    pass


class GenerationFailed(PipelineError):
    pass


# -- translation -------------------------------------------------------------

class MissingDependency(PipelineError):
    pass


class ToolchainMissing(PipelineError):
    pass


class ExtractionFailed(PipelineError):
    pass


# -- validation --------------------------------------------------------------

class TestBuildFailure(PipelineError):
    pass


class NonTerminating(PipelineError):
    pass


class EmptyShortlist(PipelineError):
    pass


# -- metrics -----------------------------------------------------------------

class BuildRequired(PipelineError):
    pass


class LinterUnavailable(PipelineError):
    pass
