#ifndef CENTDIAN_TESTS_FIXTURES_HPP
#define CENTDIAN_TESTS_FIXTURES_HPP

#include <string>

#include "centdian/instance.hpp"
#include "centdian/parse.hpp"

namespace centdian_tests {

inline std::string fixture_path(const std::string& name) {
    return std::string(CENTDIAN_FIXTURE_DIR) + "/" + name;
}

inline centdian::Instance load_fixture(const std::string& name) {
    return centdian::load_instance(fixture_path(name));
}

inline centdian::Rat R(long num, long den = 1) {
    return centdian::Rat(num, den);
}

}  // namespace centdian_tests

#endif  // CENTDIAN_TESTS_FIXTURES_HPP
