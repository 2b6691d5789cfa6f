"""srv6bench: SRv6 dataplane benchmarking toolkit.

Crafts behavior-specific SRv6 test traffic, drives a forwarder (real or
simulated) through pluggable driver/executor contracts, and locates the
partial drop rate of each forwarding behavior by logarithmic search.
"""

__version__ = "0.1.0"
