/**
 * Spawns the real Python service for end-to-end tests and tears it down
 * afterwards. The server picks an ephemeral port and prints it on the first
 * stdout line; everything here is plain child_process plumbing.
 */

import { spawn, type ChildProcess } from 'node:child_process';
import { mkdtempSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

export interface LiveServer {
  baseUrl: string;
  stop: () => Promise<void>;
}

export async function spawnServer(options: { campaign?: string } = {}): Promise<LiveServer> {
  const profileDir = mkdtempSync(join(tmpdir(), 'cq-e2e-'));
  const args = [
    '-m',
    'cipherquest.cli',
    'serve',
    '--port',
    '0',
    '--deterministic',
    '--profile-dir',
    profileDir,
  ];
  if (options.campaign !== undefined) args.push('--campaign', options.campaign);

  const child: ChildProcess = spawn('python3', args, {
    stdio: ['ignore', 'pipe', 'pipe'],
  });

  let stderrTail = '';
  child.stderr!.on('data', (chunk: Buffer) => {
    stderrTail = (stderrTail + chunk.toString()).slice(-4000);
  });

  const baseUrl = await new Promise<string>((resolve, reject) => {
    let buffer = '';
    const onData = (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[^\s]+)/);
      if (match !== null) {
        child.stdout!.off('data', onData);
        resolve(match[1]!);
      }
    };
    child.stdout!.on('data', onData);
    child.once('exit', (code) => {
      reject(new Error(`server exited early (code ${code}): ${stderrTail}`));
    });
    setTimeout(() => reject(new Error(`server did not start: ${stderrTail}`)), 30000);
  });

  // the socket is open before the banner prints, but give uvicorn a beat
  for (let i = 0; i < 50; i += 1) {
    try {
      const probe = await fetch(`${baseUrl}/api/progress`);
      if (probe.status === 401) break;
    } catch {
      await new Promise((r) => setTimeout(r, 100));
    }
  }

  return {
    baseUrl,
    stop: () =>
      new Promise<void>((resolve) => {
        child.once('exit', () => resolve());
        child.kill('SIGTERM');
        setTimeout(() => {
          child.kill('SIGKILL');
          resolve();
        }, 5000).unref();
      }),
  };
}
