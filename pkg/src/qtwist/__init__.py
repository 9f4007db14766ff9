"""Quantum unipotent cells, dual canonical bases and quantum twist maps."""


def clear_caches() -> None:
    """Drop every memo table: cached bases, minors, modules and word pairings."""
    import functools

    from . import canonical, cells, highest_weight, pbw, uqminus
    # root data stay cached: elements compare their root datum by identity
    for mod in (canonical, cells, highest_weight, pbw, uqminus):
        for obj in vars(mod).values():
            if isinstance(obj, functools._lru_cache_wrapper):
                obj.cache_clear()
            elif isinstance(obj, type):
                for attr in vars(obj).values():
                    if isinstance(attr, functools._lru_cache_wrapper):
                        attr.cache_clear()
