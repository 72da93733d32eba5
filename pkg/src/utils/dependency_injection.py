"""
Dependency Injection Container
Wires configuration sections and services by constructor type annotations
"""

import inspect
import logging
import threading
from typing import Any, Callable, Dict, Type, TypeVar, Union, get_args, get_origin, get_type_hints

T = TypeVar('T')

logger = logging.getLogger('control_lab.di')


class DIContainer:
    """
    Dependency Injection Container with singleton support
    """

    def __init__(self):
        self._factories: Dict[str, Callable[[], Any]] = {}
        self._singletons: Dict[str, Any] = {}
        self._lock = threading.RLock()

    def register_singleton(self, interface: Type[T], implementation: Type[T] = None) -> None:
        """Register a singleton service built by constructor injection"""
        implementation = implementation or interface
        with self._lock:
            self._factories[interface.__name__] = lambda: self._create_instance(implementation)
            logger.debug(f"Registered singleton: {interface.__name__}")

    def register_instance(self, interface: Type[T], instance: T) -> None:
        """Register a specific instance"""
        with self._lock:
            self._singletons[interface.__name__] = instance
            logger.debug(f"Registered instance: {interface.__name__}")

    def get(self, interface: Type[T]) -> T:
        """Get service instance"""
        service_name = interface.__name__

        if service_name in self._singletons:
            return self._singletons[service_name]

        with self._lock:
            if service_name not in self._singletons:
                if service_name not in self._factories:
                    raise ValueError(f"Service not registered: {service_name}")
                self._singletons[service_name] = self._factories[service_name]()
                logger.debug(f"Created singleton instance: {service_name}")
            return self._singletons[service_name]

    def _create_instance(self, implementation: Type[T]) -> T:
        """Create instance, resolving annotated constructor parameters"""
        hints = get_type_hints(implementation.__init__)
        params = list(inspect.signature(implementation.__init__).parameters.values())[1:]

        kwargs = {}
        for param in params:
            if param.kind in (param.VAR_POSITIONAL, param.VAR_KEYWORD):
                continue
            annotation = _unwrap_optional(hints.get(param.name))
            if isinstance(annotation, type) and self.is_registered(annotation):
                kwargs[param.name] = self.get(annotation)
            elif param.default is param.empty:
                raise ValueError(
                    f"Cannot resolve {param.name} for {implementation.__name__}"
                )
        return implementation(**kwargs)

    def is_registered(self, interface: Type) -> bool:
        name = interface.__name__
        return name in self._singletons or name in self._factories

    def clear(self):
        """Clear all registrations"""
        with self._lock:
            self._factories.clear()
            self._singletons.clear()


def _unwrap_optional(annotation: Any) -> Any:
    """``Optional[X]`` -> ``X``; other annotations unchanged"""
    if get_origin(annotation) is Union:
        args = [arg for arg in get_args(annotation) if arg is not type(None)]
        if len(args) == 1:
            return args[0]
    return annotation


# Global container instance
container = DIContainer()
