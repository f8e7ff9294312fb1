export class UsageError extends Error {}

export class MissingColumnError extends Error {
  constructor(readonly column: string) {
    super(`missing required column: ${column}`);
  }
}

export class EmptyTableError extends Error {
  constructor() {
    super("no data rows");
  }
}
