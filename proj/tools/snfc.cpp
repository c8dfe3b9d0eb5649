#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    snfc::cli::Env env;
    if (const char* cap = std::getenv("SNFC_MAX_EXHAUSTIVE")) env["SNFC_MAX_EXHAUSTIVE"] = cap;
    return snfc::cli::run(args, env, std::cout, std::cerr);
}
