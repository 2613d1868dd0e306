#include "dimlaw/cli.hpp"

int main(int argc, char** argv) { return dimlaw::run_cli(argc, argv); }
