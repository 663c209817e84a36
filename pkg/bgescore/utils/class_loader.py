import importlib
import inspect

MODES_PACKAGE = "bgescore.scoring.modes"


def load_scorer_class(mode_name: str, package: str = MODES_PACKAGE) -> type:
    """
    Import <package>.<mode_name> and return the one LocalScorer subclass it
    defines. A parent mode imported into the module is not a candidate.
    """
    from bgescore.scoring.core import LocalScorer

    module_path = f"{package}.{mode_name}"
    try:
        module = importlib.import_module(module_path)
    except ModuleNotFoundError as e:
        raise ImportError(f"Scoring mode not found. Expected file at: {module_path.replace('.', '/')}.py") from e

    scorers = [
        obj for obj in vars(module).values()
        if inspect.isclass(obj) and issubclass(obj, LocalScorer) and obj.__module__ == module.__name__
    ]
    if len(scorers) != 1:
        raise ValueError(f"Expected exactly one scorer class in '{module_path}', found {len(scorers)}")
    return scorers[0]
