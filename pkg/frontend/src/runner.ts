import { spawnSync } from "node:child_process";

/** How to reach the kernel CLI; overridable for non-default installs. */
export interface KernelConfig {
  command: string;
  baseArgs: string[];
}

function defaultConfig(): KernelConfig {
  const explicit = process.env.CHAINOPS_CLI;
  if (explicit) {
    const parts = explicit.split(" ").filter((p) => p.length > 0);
    return { command: parts[0], baseArgs: parts.slice(1) };
  }
  const python = process.env.CHAINOPS_PYTHON ?? "python3";
  return { command: python, baseArgs: ["-m", "chainops"] };
}

let config: KernelConfig = defaultConfig();

export function configureKernel(next: KernelConfig): void {
  config = next;
}

export class KernelError extends Error {
  constructor(message: string, public readonly exitCode: number) {
    super(message);
    this.name = "KernelError";
  }
}

/** Run one CLI invocation and return its stdout with the newline stripped. */
export function invoke(args: string[]): string {
  const proc = spawnSync(config.command, [...config.baseArgs, ...args], {
    encoding: "utf8",
    maxBuffer: 64 * 1024 * 1024,
  });
  if (proc.error) {
    throw new KernelError(String(proc.error), -1);
  }
  if (proc.status !== 0) {
    const detail = (proc.stderr ?? "").trim() || `exit code ${proc.status}`;
    throw new KernelError(detail, proc.status ?? -1);
  }
  return proc.stdout.replace(/\n$/, "");
}
