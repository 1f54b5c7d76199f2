#pragma once

#include <functional>
#include <string>

#include "doctest.h"

namespace hf_test {

/// True iff fn throws Ex whose message contains `needle`.
template <typename Ex, typename Fn>
bool throws_containing(Fn&& fn, const std::string& needle) {
    try {
        fn();
    } catch (const Ex& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace hf_test
