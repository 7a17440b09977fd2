// Embedded copies of the worked example systems and cell coefficient tables
// used by the verify suite and the test fixtures (data/systems mirrors these
// for CLI use).
#pragma once

namespace toral::worked {

// Three-pair system with one Eulerian factor:
// g = mu0 + x1 - 4 x1^2 + 6 y1^2 - x2^2 - y2^2 + mu3 x1^2 + mu4 y1^2.
inline constexpr const char* kSystemA = R"({
  "schema": 1, "n": 3,
  "omega": ["sqrt:1", "sqrt:2", "sqrt:3"],
  "params": ["mu0", "mu3", "mu4"],
  "g_terms": [
    {"alpha":[0,0,0],"beta":[0,0,0],"coeff":"1","mu":[1,0,0]},
    {"alpha":[1,0,0],"beta":[0,0,0],"coeff":"1"},
    {"alpha":[2,0,0],"beta":[0,0,0],"coeff":"-4"},
    {"alpha":[2,0,0],"beta":[0,0,0],"coeff":"1","mu":[0,1,0]},
    {"alpha":[0,0,0],"beta":[2,0,0],"coeff":"6"},
    {"alpha":[0,0,0],"beta":[2,0,0],"coeff":"1","mu":[0,0,1]},
    {"alpha":[0,2,0],"beta":[0,0,0],"coeff":"-1"},
    {"alpha":[0,0,0],"beta":[0,2,0],"coeff":"-1"}
  ]
})";

// Second worked system:
// g = mu0 + 2 x1 + y1 - x1^2 + y1^2 + 3 x1 x3^2 + 3 x1 y3^2
//     + mu3 x1^2 + mu4 y1^2.
inline constexpr const char* kSystemB = R"({
  "schema": 1, "n": 3,
  "omega": ["sqrt:1", "sqrt:2", "sqrt:3"],
  "params": ["mu0", "mu3", "mu4"],
  "g_terms": [
    {"alpha":[0,0,0],"beta":[0,0,0],"coeff":"1","mu":[1,0,0]},
    {"alpha":[1,0,0],"beta":[0,0,0],"coeff":"2"},
    {"alpha":[0,0,0],"beta":[1,0,0],"coeff":"1"},
    {"alpha":[2,0,0],"beta":[0,0,0],"coeff":"-1"},
    {"alpha":[2,0,0],"beta":[0,0,0],"coeff":"1","mu":[0,1,0]},
    {"alpha":[0,0,0],"beta":[2,0,0],"coeff":"1"},
    {"alpha":[0,0,0],"beta":[2,0,0],"coeff":"1","mu":[0,0,1]},
    {"alpha":[1,0,2],"beta":[0,0,0],"coeff":"3"},
    {"alpha":[1,0,0],"beta":[0,0,2],"coeff":"3"}
  ]
})";

}  // namespace toral::worked
