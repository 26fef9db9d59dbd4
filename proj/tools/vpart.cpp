#include "cli_app.hpp"

int main(int argc, char** argv) { return vpart::cli::run(argc, argv, std::cout, std::cerr); }
