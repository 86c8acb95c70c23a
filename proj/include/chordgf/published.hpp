#pragma once

#include <string>
#include <vector>

// Published coefficient lists, frozen as exact strings. These are the
// reference values the verification suites and the acceptance run compare
// against; nothing in the library computes from them.
namespace chordgf::published {

struct Row {
  std::string label;
  std::vector<std::string> coefficients;  // starting at x^0
};

inline const std::vector<std::string> kConnected = {"0", "1", "1", "4", "27", "248", "2830"};
inline const std::vector<std::string> kConnectivityOne = {"0", "1", "0", "3", "20", "185", "2101"};
inline const std::vector<std::string> kTwoConnected = {"0", "0", "1", "1", "7", "63", "729", "10113"};
inline const std::vector<std::string> kS = {"1", "1", "2", "10", "82", "898", "12018"};

inline const std::vector<Row> kDecompositionTable = {
    {"C^2/x", {"0", "1", "2", "9", "62", "566", "6372"}},
    {"C2(t)/t^2 at t=C^2/x", {"1", "1", "9", "100", "1323", "20088", "342430"}},
    {"C^2 * row 2", {"0", "0", "1", "3", "20", "189", "2232"}},
    {"(C-x)/x * row 3", {"0", "0", "0", "1", "7", "59", "598"}},
};

inline const std::vector<Row> kAlienTable = {
    {"S", {"1", "1", "2", "10", "82", "898", "12018"}},
    {"(S+x)^2", {"1", "4", "8", "28", "208", "2164", "28056"}},
    {"((S+x)^2-1)/(2x)", {"2", "4", "14", "104", "1082", "14028"}},
    {"C2*S", {"0", "0", "1", "2", "10", "82", "898", "12018"}},
    {"x^2/(C2*S)", {"1", "-2", "-6", "-50", "-574", "-8082"}},
    {"e^2*exp(-((S+x)^2-1)/(2x))", {"1", "-4", "-6", "-176/3", "-2008/3", "-46636/5"}},
};

inline const std::vector<std::string> kAlienC2 = {"1", "-6", "-4", "-218/3", "-890", "-196838/15"};

inline const std::vector<std::string> kPhi3 = {"1", "5/24", "385/1152"};

}  // namespace chordgf::published
