"""In-memory cache of constructed chain rings.

Building a ring fills its residue-field tables, so each descriptor is
constructed once per process and shared by every code over it.
"""

from typing import TYPE_CHECKING, Optional

from chaincode.schemas.ring import RingDescriptor

if TYPE_CHECKING:
    from chaincode.services.chain_ring import ChainRing


class RingCache:
    """Cache of ring handles keyed by their descriptor.

    Attributes:
        _cache: Dictionary mapping descriptors to ring handles.
    """

    def __init__(self) -> None:
        self._cache: dict[RingDescriptor, "ChainRing"] = {}

    def get_ring(self, descriptor: RingDescriptor) -> Optional["ChainRing"]:
        """Retrieve a ring handle by its descriptor.

        Args:
            descriptor: The descriptor the ring was built from.

        Returns:
            The cached ring if present, None otherwise.
        """
        return self._cache.get(descriptor)

    def set_ring(self, descriptor: RingDescriptor, ring: "ChainRing") -> None:
        """Store a ring handle.

        Args:
            descriptor: The descriptor the ring was built from.
            ring: The constructed ring.
        """
        self._cache[descriptor] = ring

    def clear_ring(self, descriptor: RingDescriptor) -> None:
        """Remove one ring from the cache.

        Args:
            descriptor: The descriptor of the ring to drop.
        """
        self._cache.pop(descriptor, None)

    def clear(self) -> None:
        """Remove every cached ring."""
        self._cache.clear()

    def __len__(self) -> int:
        return len(self._cache)


_ring_cache = RingCache()


def get_ring_cache() -> RingCache:
    """Get the process-wide ring cache."""
    return _ring_cache
