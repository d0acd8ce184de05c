#pragma once

namespace aptile {
int cli_run(int argc, char** argv);
}
