// Debouncing plus last-write-wins sequencing for in-flight requests.

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs: number,
): (...args: A) => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => fn(...args), delayMs);
  };
}

/**
 * Wraps an async producer so that only the most recently started call may
 * deliver its result; stale responses resolve to null.
 */
export function latestOnly<A extends unknown[], R>(
  fn: (...args: A) => Promise<R>,
): (...args: A) => Promise<R | null> {
  let seq = 0;
  return async (...args: A) => {
    const ticket = ++seq;
    const result = await fn(...args);
    return ticket === seq ? result : null;
  };
}
