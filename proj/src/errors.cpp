#include "zuk/errors.hpp"

namespace zuk {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ", ";
        out += parts[i];
    }
    return out;
}

}  // namespace

kernel_undefined_error::kernel_undefined_error(std::vector<std::string> offending)
    : std::runtime_error("kernel undefined: degree-0 vertices: " + join(offending)),
      labels(std::move(offending)) {}

}  // namespace zuk
