#pragma once

namespace alice {

int run_cli(int argc, char** argv);

}  // namespace alice
