#pragma once

#include <string>

namespace fixtures {

// The two-counter loop program: only x steers control flow.
inline const char* kP1Source = R"(// Two counters; only x ever steers control flow, so a reachability
// analysis keeps x inside the loop and can hide y everywhere.

int x;
int y;

L0: while (x > 0) {
L1:   y = 2 * x;
L2:   skip;
}
L3: y = 0;
L4:
)";

// Its transition system: two "BOOL x" branches out of the loop head, the
// assignment that reads x, a silent back edge and a constant assignment.
inline const char* kLoopAut =
    "des (0, 5, 5)\n"
    "(0, \"BOOL x\", 1)\n"
    "(0, \"BOOL x\", 3)\n"
    "(1, \"ASSIGN y x\", 2)\n"
    "(2, i, 0)\n"
    "(3, \"ASSIGN y\", 4)\n";

// p1 with `assert(y)` in place of the trailing constant assignment.
inline const char* kP1AssertSource = R"(int x;
int y;

L0: while (x > 0) {
L1:   y = 2 * x;
L2:   skip;
}
L3: assert(y);
L4:
)";

}  // namespace fixtures
