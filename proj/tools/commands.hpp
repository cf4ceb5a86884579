#pragma once

namespace mst::cli {

// Exit codes: 0 success, 1 a paper-suite check failed, 2 invalid input,
// 64 unknown subcommand, 69 resource cap exceeded, 70 internal error.
int run(int argc, char** argv);

}  // namespace mst::cli
