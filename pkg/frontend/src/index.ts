/**
 * Thin scripting bindings over the chainops kernel.
 *
 * No algebra happens on this side: every operation shells out to the
 * kernel CLI, and elements travel as the CLI's JSON wire format inside
 * opaque handles.  Rendering a handle always goes back through the
 * kernel, so scripting output is byte-identical to CLI output.
 */

import { KernelError, configureKernel, invoke } from "./runner.js";

export { KernelError, configureKernel };

export type Kind =
  | "surjection"
  | "perm-ring"
  | "barratt-eccles"
  | "simplicial"
  | "cubical";

export type Convention = "Berger-Fresse" | "McClure-Smith";

export interface WireTerm {
  basis: unknown[];
  coeff: number;
}

export interface WireElement {
  kind: string;
  torsion: number;
  convention: string;
  terms: WireTerm[];
}

/** Opaque handle to a kernel element plus its kind tag. */
export class ElementHandle {
  constructor(public readonly kind: Kind, public readonly wire: WireElement) {}

  /** Kernel text rendering (identical to the CLI's). */
  text(): string {
    return invoke(["parse", "--kind", this.kind, "--format", "text", this.json()]);
  }

  latex(): string {
    return invoke(["parse", "--kind", this.kind, "--format", "latex", this.json()]);
  }

  json(): string {
    return JSON.stringify(this.wire);
  }

  get torsion(): number {
    return this.wire.torsion;
  }

  isZero(): boolean {
    return this.wire.terms.length === 0;
  }

  equals(other: ElementHandle): boolean {
    return this.kind === other.kind && this.json() === other.json();
  }
}

function fromJsonOutput(kind: Kind, stdout: string): ElementHandle {
  return new ElementHandle(kind, JSON.parse(stdout) as WireElement);
}

interface ElementOptions {
  torsion?: number;
  convention?: Convention;
}

function commonArgs(kind: Kind, opts: ElementOptions): string[] {
  const args = ["--kind", kind, "--format", "json"];
  if (opts.torsion !== undefined) args.push("--torsion", String(opts.torsion));
  if (opts.convention !== undefined) args.push("--convention", opts.convention);
  return args;
}

/** Parse a literal (or JSON) into a normalized kernel element. */
export function parse(text: string, kind: Kind, opts: ElementOptions = {}): ElementHandle {
  return fromJsonOutput(kind, invoke(["parse", ...commonArgs(kind, opts), text]));
}

// constructors mirroring the kernel's literal styles

export type FlatSpec = string | Record<string, number> | number[][];

export function surjection(terms: FlatSpec, opts: ElementOptions = {}): ElementHandle {
  return parse(literalFlat(terms), "surjection", opts);
}

export function permRing(terms: FlatSpec, opts: ElementOptions = {}): ElementHandle {
  return parse(literalFlat(terms), "perm-ring", opts);
}

export function barrattEccles(simplices: number[][][], opts: ElementOptions = {}): ElementHandle {
  return parse(literalNested(simplices), "barratt-eccles", opts);
}

export function simplicial(keys: number[][][], opts: ElementOptions = {}): ElementHandle {
  return parse(literalNested(keys), "simplicial", opts);
}

export function cubical(keys: number[][][], opts: ElementOptions = {}): ElementHandle {
  return parse(literalNested(keys), "cubical", opts);
}

function literalFlat(terms: FlatSpec): string {
  if (typeof terms === "string") {
    return terms;
  }
  if (Array.isArray(terms)) {
    return terms.map((key) => `(${key.join(",")})`).join(" + ") || "0";
  }
  const pieces: string[] = [];
  for (const [key, coeff] of Object.entries(terms)) {
    if (coeff === 0) continue;
    const mag = Math.abs(coeff);
    const body = (mag === 1 ? "" : String(mag)) + key;
    pieces.push(coeff > 0 ? `+ ${body}` : `- ${body}`);
  }
  if (pieces.length === 0) return "0";
  const first = pieces[0].startsWith("+ ") ? pieces[0].slice(2) : pieces[0];
  return [first, ...pieces.slice(1)].join(" ");
}

function literalNested(keys: number[][][]): string {
  if (keys.length === 0) return "0";
  return keys
    .map((key) => `(${key.map((f) => `(${f.join(",")})`).join(",")})`)
    .join(" + ");
}

// kernel operations

export function boundary(el: ElementHandle): ElementHandle {
  return fromJsonOutput(
    el.kind,
    invoke(["boundary", "--kind", el.kind, "--format", "json", el.json()]),
  );
}

export function compose(x: ElementHandle, y: ElementHandle, position: number): ElementHandle {
  if (x.kind !== y.kind) {
    throw new KernelError(`kind mismatch: ${x.kind} vs ${y.kind}`, -1);
  }
  return fromJsonOutput(
    x.kind,
    invoke([
      "compose",
      "--kind",
      x.kind,
      "--format",
      "json",
      "--position",
      String(position),
      x.json(),
      y.json(),
    ]),
  );
}

/** The Alexander-Whitney diagonal; text form only (pairs are not elements). */
export function diagonal(el: ElementHandle): string {
  return invoke(["diagonal", "--kind", el.kind, el.json()]);
}

export function complexity(el: ElementHandle): number {
  return Number(invoke(["complexity", "--kind", el.kind, el.json()]));
}

export function actSimplicial(el: ElementHandle, dim: number): ElementHandle {
  return fromJsonOutput(
    "simplicial",
    invoke([
      "act",
      "--kind",
      el.kind,
      "--format",
      "json",
      "--dim",
      String(dim),
      "--context",
      "simplicial",
      el.json(),
    ]),
  );
}

export function actCubical(el: ElementHandle, dim: number): ElementHandle {
  return fromJsonOutput(
    "cubical",
    invoke([
      "act",
      "--kind",
      el.kind,
      "--format",
      "json",
      "--dim",
      String(dim),
      "--context",
      "cubical",
      el.json(),
    ]),
  );
}

export function psiBe(r: number, i: number): ElementHandle {
  return fromJsonOutput(
    "barratt-eccles",
    invoke(["psi", "--operad", "barratt-eccles", "-r", String(r), "-i", String(i), "--format", "json"]),
  );
}

export function psiSurj(r: number, i: number): ElementHandle {
  return fromJsonOutput(
    "surjection",
    invoke(["psi", "--operad", "surjection", "-r", String(r), "-i", String(i), "--format", "json"]),
  );
}

export interface SteenrodRequest {
  prime: number;
  s: number;
  q: number;
  bockstein?: boolean;
  context?: "simplicial" | "cubical";
}

export function steenrodChain(req: SteenrodRequest): ElementHandle {
  const context = req.context ?? "simplicial";
  const args = [
    "steenrod",
    "--prime",
    String(req.prime),
    "-s",
    String(req.s),
    "-q",
    String(req.q),
    "--context",
    context,
    "--format",
    "json",
  ];
  if (req.bockstein) args.push("--bockstein");
  return fromJsonOutput(context, invoke(args));
}

/** The kernel version string mirrored by the bindings. */
export const version = "0.1.0";
