export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

/** Parse CSV text with a header row. Handles quoted fields and CRLF. */
export function parseCsv(text: string): Table {
  const records: string[][] = [];
  let field = "";
  let record: string[] = [];
  let inQuotes = false;
  const pushField = () => {
    record.push(field);
    field = "";
  };
  const pushRecord = () => {
    pushField();
    records.push(record);
    record = [];
  };
  for (let i = 0; i < text.length; i++) {
    const ch = text[i];
    if (inQuotes) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i++;
        } else {
          inQuotes = false;
        }
      } else {
        field += ch;
      }
    } else if (ch === '"') {
      inQuotes = true;
    } else if (ch === ",") {
      pushField();
    } else if (ch === "\n") {
      pushRecord();
    } else if (ch !== "\r") {
      field += ch;
    }
  }
  if (field.length > 0 || record.length > 0) pushRecord();

  const header = records.shift();
  if (!header || header.length === 0 || header.every((c) => c === "")) {
    throw new Error("empty file: no header row");
  }
  const rows = records
    .filter((r) => !(r.length === 1 && r[0] === ""))
    .map((r) => {
      const row: Record<string, string> = {};
      header.forEach((name, i) => {
        row[name] = r[i] ?? "";
      });
      return row;
    });
  return { columns: header, rows };
}

export function numericColumn(table: Table, name: string): number[] {
  return table.rows.map((row) => {
    const value = Number(row[name]);
    if (!Number.isFinite(value)) {
      throw new Error(`column ${name}: non-numeric value ${row[name]}`);
    }
    return value;
  });
}
