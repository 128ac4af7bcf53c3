#pragma once

namespace jgpt {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error.
int run(int argc, const char* const* argv);

}  // namespace jgpt
