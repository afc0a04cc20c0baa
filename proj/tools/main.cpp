#include <iostream>
#include <string>
#include <vector>

#include "detrep/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return detrep::command_dispatch(std::move(args), std::cout, std::cerr);
}
