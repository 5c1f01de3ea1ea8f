#include <iostream>
#include <string>
#include <vector>

#include <doldw/doldw.hpp>
#include <doldw/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return doldw::cli::run(args, std::cout, std::cerr);
}
