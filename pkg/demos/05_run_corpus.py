"""
Running the bundled identity corpus
===================================

The corpus is a versioned TOML file of identity claims: closed forms,
recurrences, and evaluation routes.  The runner re-derives everything
from scratch (exact sums, fresh telescoping discovery, certificate
verification, series cross-checks) and reports one verdict per entry.
"""

from importlib import resources

from telescope import CorpusOptions, run_corpus

corpus = resources.files("telescope") / "data" / "catalan_identities.toml"

# a shortened range keeps the demo quick; drop the override to run the
# corpus at its full declared ranges
report = run_corpus(corpus, CorpusOptions(range_override=(0, 20)))
print(report.render_text())

assert report.passed
