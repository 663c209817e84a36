import copy
from typing import Any, Dict, List


def smart_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    """
    Merges 'override' into 'base'.
    - Dictionaries are deep merged.
    - Lists/Scalars in 'override' replace 'base'.
    - None in 'override' means "not given" and keeps 'base'.
    """
    result = copy.deepcopy(base)

    for key, value in override.items():
        if value is None:
            continue
        if isinstance(value, dict) and key in result and isinstance(result[key], dict):
            result[key] = smart_merge(result[key], value)
        else:
            result[key] = value

    return result


def resolve_config(defaults: Dict[str, Any], file_config: Dict[str, Any], cli_overrides: List[Dict[str, Any]]) -> Dict[
    str, Any]:
    """
    Resolution Order: Defaults -> Config file -> CLI flags
    """
    final_config = smart_merge(defaults, file_config)

    for override in cli_overrides:
        final_config = smart_merge(final_config, override)

    return final_config
