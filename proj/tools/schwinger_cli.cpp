#include <cstdlib>
#include <iostream>

#include "schwinger/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env;
    if (const char* v = std::getenv("SCHWINGER_MAX_DENSE")) env = v;
    const auto r = schwinger::run_cli(args, env);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
