#pragma once

// Values produced by tests/oracle/moment_oracle.py (independent Python
// Fraction enumeration). Regenerate with: python3 moment_oracle.py

#include <vector>

namespace oracle {

struct Frac {
  const char* num;
  const char* den;
};

struct MomentValue {
  long d_a, d_b, r;
  int k;
  Frac value;
};

struct PureStateValue {
  long m, n;
  int k;
  Frac value;  // E tr rho_A^k
};

struct WgValue {
  int k;
  long d;
  std::vector<int> type;
  Frac value;
};

inline const std::vector<MomentValue> kMoments = {
    {2, 2, 1, 1, {"1", "1"}},
    {2, 2, 1, 2, {"1", "1"}},
    {2, 2, 1, 3, {"7", "10"}},
    {2, 2, 1, 4, {"23", "35"}},
    {2, 2, 1, 5, {"4", "7"}},
    {2, 2, 2, 1, {"2", "1"}},
    {2, 2, 2, 2, {"2", "1"}},
    {2, 2, 2, 3, {"2", "1"}},
    {2, 2, 2, 4, {"73", "35"}},
    {2, 2, 2, 5, {"31", "14"}},
    {2, 2, 3, 1, {"3", "1"}},
    {2, 2, 3, 2, {"3", "1"}},
    {2, 2, 3, 3, {"33", "10"}},
    {2, 2, 3, 4, {"27", "7"}},
    {2, 2, 3, 5, {"33", "7"}},
    {2, 3, 2, 1, {"2", "1"}},
    {2, 3, 2, 2, {"2", "1"}},
    {2, 3, 2, 3, {"58", "35"}},
    {2, 3, 2, 4, {"34", "21"}},
    {2, 3, 2, 5, {"11", "7"}},
    {3, 3, 2, 1, {"2", "1"}},
    {3, 3, 2, 2, {"2", "1"}},
    {3, 3, 2, 3, {"14", "11"}},
    {3, 3, 2, 4, {"578", "495"}},
    {3, 3, 2, 5, {"1246", "1287"}},
    {3, 3, 3, 1, {"3", "1"}},
    {3, 3, 3, 2, {"3", "1"}},
    {3, 3, 3, 3, {"939", "385"}},
    {3, 3, 3, 4, {"557", "231"}},
    {3, 3, 3, 5, {"643", "273"}},
    {3, 3, 4, 1, {"4", "1"}},
    {3, 3, 4, 2, {"4", "1"}},
    {3, 3, 4, 3, {"292", "77"}},
    {3, 3, 4, 4, {"2792", "693"}},
    {3, 3, 4, 5, {"39476", "9009"}},
    {2, 3, 5, 4, {"131", "21"}},
    {3, 2, 2, 4, {"34", "21"}},
    {1, 4, 2, 4, {"2", "1"}},
    {2, 4, 3, 4, {"206", "77"}},
    {4, 2, 3, 4, {"206", "77"}},
};

inline const std::vector<PureStateValue> kPureState = {
    {2, 2, 3, {"7", "10"}},
    {2, 2, 4, {"22", "35"}},
    {2, 2, 5, {"4", "7"}},
    {2, 2, 6, {"11", "21"}},
    {2, 3, 3, {"4", "7"}},
    {2, 3, 4, {"10", "21"}},
    {2, 3, 5, {"17", "42"}},
    {2, 3, 6, {"23", "66"}},
    {3, 3, 3, {"23", "55"}},
    {3, 3, 4, {"17", "55"}},
    {3, 3, 5, {"101", "429"}},
    {3, 3, 6, {"183", "1001"}},
};

inline const std::vector<WgValue> kWeingarten = {
    {1, 1, {1}, {"1", "1"}},
    {1, 2, {1}, {"1", "2"}},
    {1, 3, {1}, {"1", "3"}},
    {2, 2, {1, 1}, {"1", "3"}},
    {2, 2, {2}, {"-1", "6"}},
    {2, 3, {1, 1}, {"1", "8"}},
    {2, 3, {2}, {"-1", "24"}},
    {2, 4, {1, 1}, {"1", "15"}},
    {2, 4, {2}, {"-1", "60"}},
    {3, 3, {1, 1, 1}, {"7", "120"}},
    {3, 3, {2, 1}, {"-1", "40"}},
    {3, 3, {3}, {"1", "60"}},
    {3, 4, {1, 1, 1}, {"7", "360"}},
    {3, 4, {2, 1}, {"-1", "180"}},
    {3, 4, {3}, {"1", "360"}},
    {3, 5, {1, 1, 1}, {"23", "2520"}},
    {3, 5, {2, 1}, {"-1", "504"}},
    {3, 5, {3}, {"1", "1260"}},
    {4, 4, {1, 1, 1, 1}, {"67", "10080"}},
    {4, 4, {2, 1, 1}, {"-1", "420"}},
    {4, 4, {2, 2}, {"11", "10080"}},
    {4, 4, {3, 1}, {"29", "20160"}},
    {4, 4, {4}, {"-1", "1008"}},
    {4, 5, {1, 1, 1, 1}, {"431", "201600"}},
    {4, 5, {2, 1, 1}, {"-1", "1920"}},
    {4, 5, {2, 2}, {"31", "201600"}},
    {4, 5, {3, 1}, {"47", "201600"}},
    {4, 5, {4}, {"-1", "8064"}},
    {4, 6, {1, 1, 1, 1}, {"169", "181440"}},
    {4, 6, {2, 1, 1}, {"-1", "5670"}},
    {4, 6, {2, 2}, {"1", "25920"}},
    {4, 6, {3, 1}, {"23", "362880"}},
    {4, 6, {4}, {"-1", "36288"}},
};

}  // namespace oracle
