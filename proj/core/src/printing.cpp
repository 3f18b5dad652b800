#include "chered/printing.hpp"

namespace chered {

std::string pretty(const PolyRepElement& f) {
    if (f.is_zero()) return "0";
    if (f.is_t_free()) return f.t_free_part().str();
    return f.str();
}

} // namespace chered
