#include "dce/scenarios_io.hpp"

int main(int argc, char** argv) { return dce::cli_main(argc, argv); }
