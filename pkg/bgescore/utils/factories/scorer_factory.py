from bgescore.utils.class_loader import load_scorer_class
from bgescore.utils.interfaces.ifactory import IFactory


class ScorerFactory(IFactory):
    """Registry of scoring modes; modules under scoring/modes register themselves on import."""

    @classmethod
    def get_available_modes(cls):
        return super().get_registry_keys()

    @classmethod
    def get_scorer_class(cls, name) -> type:
        name = getattr(name, "value", name)
        if name not in cls._registry:
            # importing the plugin module runs its register() decorator
            try:
                load_scorer_class(name)
            except ImportError as e:
                raise ValueError(f"No scoring mode registered as '{name}'") from e
        return cls._registry[name]

    @classmethod
    def create(cls, name, ctx):
        return cls.get_scorer_class(name)(ctx)
