import { ApiClient } from "../src/api.js";

/** ApiClient whose fetch is a canned route table; records request bodies. */
export function mockClient(routes: Record<string, unknown>) {
  const calls: { path: string; body: unknown }[] = [];
  const client = new ApiClient("", async (input, init) => {
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    calls.push({ path: input, body });
    if (!(input in routes)) {
      return new Response(
        JSON.stringify({ error: { code: "NotFound", message: input } }),
        { status: 404, headers: { "content-type": "application/json" } },
      );
    }
    const entry = routes[input] as { __status?: number } & Record<string, unknown>;
    const status = entry.__status ?? 200;
    const payload = { ...entry };
    delete payload.__status;
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "content-type": "application/json" },
    });
  });
  return { client, calls };
}
