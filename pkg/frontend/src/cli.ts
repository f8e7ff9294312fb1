import { EmptyTableError, MissingColumnError, UsageError } from "./errors.js";
import { FigureKind, PlotSpec, render } from "./render.js";

const USAGE =
  "usage: render --kind fig2|fig4 --in <csv> --out <png|svg>";

export function parseArgs(argv: string[]): PlotSpec {
  let kind: string | undefined;
  let input: string | undefined;
  let output: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    const next = () => {
      const value = argv[++i];
      if (value === undefined) throw new UsageError(`${arg} needs a value`);
      return value;
    };
    switch (arg) {
      case "--kind":
        kind = next();
        break;
      case "--in":
        input = next();
        break;
      case "--out":
        output = next();
        break;
      default:
        throw new UsageError(`unknown argument: ${arg}`);
    }
  }
  if (!kind || !input || !output) throw new UsageError(USAGE);
  if (kind !== "fig2" && kind !== "fig4") {
    throw new UsageError(`unknown figure kind: ${kind}`);
  }
  return { kind: kind as FigureKind, input, output };
}

export function main(argv: string[]): number {
  let spec: PlotSpec;
  try {
    spec = parseArgs(argv);
  } catch (error) {
    console.error(`render: ${(error as Error).message}`);
    console.error(USAGE);
    return 2;
  }
  try {
    render(spec);
  } catch (error) {
    if (
      error instanceof MissingColumnError ||
      error instanceof EmptyTableError ||
      error instanceof UsageError
    ) {
      console.error(`render: ${error.message}`);
    } else {
      console.error(`render: ${(error as Error).message}`);
    }
    return 1;
  }
  return 0;
}

if (process.argv[1] && /cli\.(ts|js)$/.test(process.argv[1])) {
  process.exit(main(process.argv.slice(2)));
}
