#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return turan::cli::run_cli(argc, argv, std::cout, std::cerr);
}
