#include <iostream>

#include "mss4/cli_app.hpp"

int main(int argc, char** argv) {
    return mss4::run_cli(argc, argv, std::cout, std::cerr);
}
