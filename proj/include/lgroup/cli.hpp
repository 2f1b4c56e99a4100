#pragma once

// Command-line front end. Subcommands:
//   verify-paper  — run the reference verification against the pinned
//                   verdict table for every built-in presentation;
//   check         — class membership checks on a presentation file or a
//                   built-in name;
//   element       — evaluate a single predicate on term arguments.
//
// Exit codes (stable contract): 0 success / all requested classes hold,
// 1 counterexample or table mismatch, 2 usage or input error.
// Reports are byte-identical across runs with identical flags and seed.

namespace lgroup {

int run_cli(int argc, const char* const* argv);

}  // namespace lgroup
