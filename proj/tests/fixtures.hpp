#pragma once

#include <string>
#include <vector>

#include "hotplug/io.hpp"

// Printed arrays and transmissions of the two worked examples, transcribed
// directly so construction code can be checked against them byte for byte.
namespace fixtures {

inline const std::string kExample1B =
    "*,*,1,2\n"
    "*,1,*,3\n"
    "*,2,3,*\n"
    "1,*,*,4\n"
    "2,*,4,*\n"
    "3,4,*,*\n";

inline const std::string kExample1P =
    "*,*,-,-,-,-\n"
    "*,-,*,-,-,-\n"
    "*,-,-,*,-,-\n"
    "*,-,-,-,*,-\n"
    "*,-,-,-,-,*\n"
    "-,*,*,-,-,-\n"
    "-,*,-,*,-,-\n"
    "-,*,-,-,*,-\n"
    "-,*,-,-,-,*\n"
    "-,-,*,*,-,-\n"
    "-,-,*,-,*,-\n"
    "-,-,*,-,-,*\n"
    "-,-,-,*,*,-\n"
    "-,-,-,*,-,*\n"
    "-,-,-,-,*,*\n";

inline const std::string kExample2B =
    "*,*,1\n"
    "*,1,*\n"
    "1,*,*\n"
    "*,*,2\n"
    "*,2,*\n"
    "2,*,*\n"
    "*,3,4\n"
    "3,*,5\n"
    "4,5,*\n";

inline const std::string kExample2P =
    "*,*,-,-,*,*,-,-\n"
    "-,-,*,*,-,-,*,*\n"
    "-,*,-,*,-,*,-,*\n"
    "*,-,*,-,*,-,*,-\n"
    "*,-,-,*,*,-,-,*\n"
    "-,*,*,-,-,*,*,-\n"
    "*,*,*,*,-,-,-,-\n"
    "-,-,-,-,*,*,*,*\n"
    "*,*,-,-,-,-,*,*\n"
    "-,-,*,*,*,*,-,-\n"
    "*,-,*,-,-,*,-,*\n"
    "-,*,-,*,*,-,*,-\n"
    "*,-,-,*,-,*,*,-\n"
    "-,*,*,-,*,-,-,*\n";

// (file id, coded-subfile index) term multiset per transmission.
using Terms = std::vector<std::pair<int, int>>;

inline const std::vector<Terms> kExample1Transmissions = {
    {{2, 13}, {3, 4}, {1, 3}},
    {{2, 14}, {3, 5}, {5, 3}},
    {{2, 15}, {1, 5}, {5, 4}},
    {{3, 15}, {1, 14}, {5, 13}},
};

inline const std::vector<Terms> kExample2Transmissions = {
    {{1, 8}, {3, 9}, {4, 1}},
    {{1, 11}, {3, 14}, {4, 6}},
    {{1, 10}, {3, 7}},
    {{1, 2}, {4, 7}},
    {{3, 2}, {4, 10}},
};

inline std::string design_path() {
  return std::string(HOTPLUG_DATA_DIR) + "/designs/3-8-4-1.txt";
}

inline hotplug::Design example2_design() {
  return hotplug::parse_design(hotplug::read_file(design_path()));
}

}  // namespace fixtures
