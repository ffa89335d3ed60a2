#pragma once

#include <ostream>

namespace cremona {

// Golden reproduction suite: every worked example and displayed value the
// library is built around, checked exactly. Prints one ok/FAIL line per
// example; returns the failure count.
int run_paper_examples(std::ostream& out);

} // namespace cremona
