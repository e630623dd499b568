"""
Utility module for metric counters used across the application
"""

import logfire

# Kernel metrics
kernel_counter = logfire.metric_counter("kernel_eval_count", unit="1", description="Number of N/R/P kernel evaluations by cache status")
optimize_counter = logfire.metric_counter("big_m_count", unit="1", description="Number of M(n, r, u) maximizations by status")

# Polytope metrics
subset_counter = logfire.metric_counter("vertex_subset_solve_count", unit="1", description="Number of constraint subsets solved by outcome")

# Transfer metrics
conductor_counter = logfire.metric_counter("conductor_count", unit="1", description="Number of conductors computed from resolvent discriminants by status")
