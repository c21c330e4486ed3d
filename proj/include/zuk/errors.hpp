#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zuk {

// A problem with user-supplied data. The CLI maps this to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant or an engine disagreement. Exit code 2.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The simple random walk is undefined: some vertex has degree 0. Not an
// input error; the pipeline turns it into an "inapplicable" verdict.
struct kernel_undefined_error : std::runtime_error {
    std::vector<std::string> labels;  // the offending vertices
    explicit kernel_undefined_error(std::vector<std::string> offending);
};

}  // namespace zuk
